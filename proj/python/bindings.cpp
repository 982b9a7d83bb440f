#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "superjac/cli.hpp"
#include "superjac/divisor.hpp"
#include "superjac/modrep.hpp"
#include "superjac/multanalysis.hpp"
#include "superjac/reports.hpp"
#include "superjac/verify.hpp"

namespace py = pybind11;
using namespace superjac;

namespace {

py::int_ to_py(const BigInt& v) {
    // route through the decimal string so arbitrary precision survives
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.str()));
}

GroupLabel label_from_string(const std::string& s) {
    if (s == "S" || s == "symmetric") return GroupLabel::SymmetricFull;
    if (s == "A" || s == "alternating") return GroupLabel::Alternating;
    throw ValidationError("group label must be 'S' or 'A'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants and endomorphism certificates for superelliptic curves";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
    py::register_exception<InconclusiveError>(m, "InconclusiveError", PyExc_RuntimeError);

    py::class_<CurveFamily>(m, "Family")
        .def_readonly("p", &CurveFamily::p)
        .def_readonly("r", &CurveFamily::r)
        .def_readonly("s", &CurveFamily::s)
        .def_readonly("m", &CurveFamily::m)
        .def_readonly("q", &CurveFamily::q)
        .def_readonly("n", &CurveFamily::n)
        .def_readonly("theorem_regime", &CurveFamily::theorem_regime)
        .def("__repr__", [](const CurveFamily& f) { return "Family" + f.label(); });

    m.def("family", &make_family, py::arg("p"), py::arg("r"), py::arg("s"), py::arg("m"));
    m.def("family_from_coefficients",
          [](const std::vector<std::string>& coeffs, long long p, int r) {
              std::ostringstream line;
              for (const auto& c : coeffs) line << c << " ";
              return family_from_polynomial(parse_polynomial_line(line.str()), p, r);
          },
          py::arg("coefficients"), py::arg("p"), py::arg("r"),
          "coefficients ascending, each 'a' or 'a/b'");

    m.def("genus", &genus);
    m.def("infinity_count", [](const CurveFamily& f) { return f.infinity_count(); });
    m.def("differential_basis", &differential_basis);
    m.def("eigenspace_dimension", &eigenspace_dimension, py::arg("family"), py::arg("i"));
    m.def("multiplicity_profile", [](const CurveFamily& f) {
        return multiplicity_profile(f).values;
    });
    m.def("multiplicity_gcd", &multiplicity_gcd);
    m.def("dimension_decomposition", [](const CurveFamily& f) {
        std::vector<std::pair<int, long long>> out;
        for (const LevelDimension& lv : dimension_decomposition(f))
            out.emplace_back(lv.level, lv.dimension);
        return out;
    });
    m.def("birational_exponents", [](const CurveFamily& f) {
        BirationalChange ch = birational_exponents(f);
        auto grab = [](const IntMatrix& mat) {
            std::vector<std::vector<long long>> rows(2, std::vector<long long>(2));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        static_cast<long long>(mat.at(i, j));
            return rows;
        };
        return std::make_pair(grab(ch.forward.exponents), grab(ch.inverse.exponents));
    });

    m.def("picard_invariant_factors", [](const CurveFamily& f) {
        py::list out;
        for (const BigInt& d : picard_structure(f).group.invariant_factors) out.append(to_py(d));
        return out;
    });
    m.def("picard_p_rank", [](const CurveFamily& f) { return picard_structure(f).p_rank; });
    m.def("torsion_map_rank", [](const CurveFamily& f) { return torsion_map(f).rank; });

    m.def("commutant_dimension", [](int n, long long p, const std::string& label) {
        PermGenerators gens = standard_generators(n, label_from_string(label));
        return commutant(build_module(gens, p, ModuleTag::V)).dimension;
    }, py::arg("n"), py::arg("p"), py::arg("group"));
    m.def("heart_is_simple", [](int n, long long p, const std::string& label,
                                unsigned long long seed) {
        PermGenerators gens = standard_generators(n, label_from_string(label));
        return is_simple(build_module(gens, p, ModuleTag::W), seed).simple;
    }, py::arg("n"), py::arg("p"), py::arg("group"), py::arg("seed") = 1);

    m.def("orbit_partition", [](long long q, long long p, long long k) {
        return orbit_partition(q, p, k).blocks;
    });
    m.def("monotone_constancy", [](long long q, long long p, long long k, bool nonincreasing) {
        ConstancyResult c = monotone_constancy(q, p, k, nonincreasing);
        py::dict d;
        d["q"] = c.q;
        d["k"] = c.k;
        d["fully_constant"] = c.fully_constant;
        d["forced_prefix"] = c.forced_prefix;
        d["classes"] = c.classes;
        if (c.witness) d["witness"] = *c.witness;
        return d;
    }, py::arg("q"), py::arg("p"), py::arg("k"), py::arg("nonincreasing") = false);
    m.def("invariant_multipliers", [](const CurveFamily& f) {
        std::set<long long> ks = invariant_multipliers(multiplicity_profile(f), f.p);
        return std::vector<long long>(ks.begin(), ks.end());
    });

    m.def("certificate_json", [](const CurveFamily& f, const std::string& label,
                                 unsigned long long seed) {
        Certificate cert = endomorphism_certificate(f, label_from_string(label), seed);
        return Json(make_certificate_report(cert)).dump();
    }, py::arg("family"), py::arg("galois"), py::arg("seed") = 1);

    m.def("verify_all", [](long long q_max, long long n_max, unsigned long long seed, int jobs) {
        VerifyBounds b;
        b.q_max = q_max;
        b.n_max = n_max;
        auto results = run_verification(b, seed, jobs, FaultInjection{});
        std::vector<std::tuple<int, std::string, bool, std::string>> out;
        for (const CriterionResult& r : results)
            out.emplace_back(r.id, r.name, r.passed, r.detail);
        return out;
    }, py::arg("q_max") = 128, py::arg("n_max") = 50, py::arg("seed") = 1, py::arg("jobs") = 1);
}
