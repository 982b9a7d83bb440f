#include "superjac/reports.hpp"

#include <sstream>

namespace superjac {

FamilyReport make_family_report(const CurveFamily& f) {
    return {f.p, f.r, f.s, f.m, f.q, f.n, f.theorem_regime};
}

InvariantsReport make_invariants_report(const CurveFamily& f) {
    InvariantsReport rep;
    rep.family = make_family_report(f);
    rep.genus = genus(f);
    rep.infinity_points = f.infinity_count();
    rep.basis_size = static_cast<long long>(differential_basis(f).size());
    for (const auto& [i, ni] : multiplicity_profile(f).values)
        rep.profile[std::to_string(i)] = ni;
    rep.multiplicity_gcd = multiplicity_gcd(f);
    return rep;
}

DecomposeReport make_decompose_report(const CurveFamily& f) {
    DecomposeReport rep;
    rep.family = make_family_report(f);
    rep.genus = genus(f);
    for (const LevelDimension& lv : dimension_decomposition(f)) {
        rep.levels.push_back({{"level", lv.level},
                              {"prime_power", lv.prime_power},
                              {"dimension", lv.dimension}});
        rep.total += lv.dimension;
    }
    return rep;
}

PicardReport make_picard_report(const CurveFamily& f) {
    PicardReport rep;
    rep.family = make_family_report(f);
    PicardStructure pic = picard_structure(f);
    for (const BigInt& d : pic.group.invariant_factors) rep.invariant_factors.push_back(d.str());
    rep.p_rank = pic.p_rank;
    TorsionMap tm = torsion_map(f);
    rep.torsion_map_rank = tm.rank;
    rep.kernel_is_constants = tm.kernel.size() == 1;
    if (rep.kernel_is_constants)
        for (long long x : tm.kernel.front())
            rep.kernel_is_constants =
                rep.kernel_is_constants && x == tm.kernel.front().front() && x != 0;
    int idx = 1;
    for (const Divisor& d : p_torsion_classes(f)) {
        std::map<std::string, std::string> row;
        row["index"] = std::to_string(idx++);
        row["divisor"] = d.to_string();
        rep.classes.push_back(std::move(row));
    }
    return rep;
}

CommutantCliReport make_commutant_report(int n, long long p, GroupLabel label,
                                         unsigned long long seed) {
    CommutantReport r = commutant_report(n, p, label, seed);
    CommutantCliReport rep;
    rep.n = r.n;
    rep.p = r.p;
    rep.group = group_label_name(r.label);
    rep.v_commutant_dim = r.v_commutant_dim;
    rep.v_commutant_scalar = r.v_commutant_scalar;
    rep.w_simple = r.w_simple;
    rep.w_commutant_dim = r.w_commutant_dim;
    rep.doubly_transitive = r.doubly_transitive;
    rep.passed = r.passed;
    return rep;
}

SymmetrySweepReport make_symmetry_report(long long p, int r_max) {
    SweepReport r = constancy_sweep(p, r_max);
    SymmetrySweepReport rep;
    rep.p = r.p;
    rep.r_max = r.r_max;
    rep.cases = r.cases;
    rep.all_pass = r.all_pass;
    for (const SweepCase& sc : r.sharp_cases)
        rep.sharp_cases.push_back(
            {{"q", sc.q}, {"k", sc.k}, {"forced_prefix", sc.forced_prefix}});
    for (const SweepCase& sc : r.failures)
        rep.failures.push_back({{"q", sc.q}, {"k", sc.k}, {"forced_prefix", sc.forced_prefix}});
    return rep;
}

MultiplierReport make_multiplier_report(const CurveFamily& f) {
    MultiplierReport rep;
    rep.family = make_family_report(f);
    for (long long k : invariant_multipliers(multiplicity_profile(f), f.p))
        rep.invariant_multipliers.push_back(k);
    rep.trivial = rep.invariant_multipliers == std::vector<long long>{1};
    return rep;
}

CertificateReport make_certificate_report(const Certificate& cert) {
    CertificateReport rep;
    rep.family = make_family_report(cert.family);
    rep.galois_group = group_label_name(cert.galois);
    rep.seed = std::to_string(cert.seed);
    for (const CertificateCheck& c : cert.checks)
        rep.checks.push_back(
            {{"claim", c.claim}, {"status", c.status}, {"detail", c.detail}});
    rep.passed = !cert.failed() && cert.conclusion.has_value();
    rep.endomorphism_algebra = cert.algebra_product;
    if (cert.conclusion)
        for (const CertificateLevel& lv : *cert.conclusion)
            rep.levels.push_back({{"level", std::to_string(lv.level)},
                                  {"prime_power", std::to_string(lv.prime_power)},
                                  {"dimension", std::to_string(lv.dimension)},
                                  {"algebra", lv.algebra},
                                  {"ring", lv.ring},
                                  {"provenance", lv.provenance}});
    return rep;
}

VerifyAllReport make_verify_all_report(const VerifyBounds& bounds, unsigned long long seed,
                                       const std::vector<CriterionResult>& results) {
    VerifyAllReport rep;
    rep.q_max = bounds.q_max;
    rep.n_max = bounds.n_max;
    rep.seed = std::to_string(seed);
    rep.criteria = static_cast<long long>(results.size());
    for (const CriterionResult& r : results) {
        if (r.passed) ++rep.passed;
        else ++rep.failed;
        std::ostringstream secs;
        secs.precision(3);
        secs << std::fixed << r.seconds;
        rep.results.push_back({{"id", std::to_string(r.id)},
                               {"name", r.name},
                               {"status", r.passed ? "pass" : "fail"},
                               {"detail", r.detail},
                               {"seconds", secs.str()}});
    }
    return rep;
}

} // namespace superjac
