#include "superjac/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "superjac/reports.hpp"

namespace superjac {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRegime = 3;

struct FamilyArgs {
    long long p = 0;
    int r = 0;
    int s = -1;
    long long m = 0;
    std::string poly_path;
};

CurveFamily resolve_family(const FamilyArgs& fa) {
    if (!fa.poly_path.empty()) {
        if (fa.s >= 0 || fa.m > 0)
            throw ValidationError("--poly conflicts with --s/--m (degree determines them)");
        std::ifstream in(fa.poly_path);
        if (!in) throw ValidationError("cannot open polynomial file: " + fa.poly_path);
        std::string line;
        std::getline(in, line);
        return family_from_polynomial(parse_polynomial_line(line), fa.p, fa.r);
    }
    if (fa.s < 0 || fa.m <= 0)
        throw ValidationError("either --poly or all of --p --r --s --m are required");
    return make_family(fa.p, fa.r, fa.s, fa.m);
}

GroupLabel parse_group(const std::string& s) {
    if (s == "S" || s == "s" || s == "symmetric") return GroupLabel::SymmetricFull;
    if (s == "A" || s == "a" || s == "alternating") return GroupLabel::Alternating;
    throw ValidationError("--galois/--group must be S or A");
}

unsigned long long resolve_seed(unsigned long long cli_seed) {
    if (const char* env = std::getenv("SUPERJAC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ValidationError("SUPERJAC_SEED must be an unsigned integer");
        }
    }
    return cli_seed;
}

void print_family(std::ostream& out, const FamilyReport& f) {
    out << "family: p=" << f.p << " r=" << f.r << " s=" << f.s << " m=" << f.m << " (q=" << f.q
        << ", n=" << f.n << ", theorem regime: " << (f.theorem_regime ? "yes" : "no") << ")\n";
}

void render_invariants(std::ostream& out, const InvariantsReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    print_family(out, rep.family);
    out << "genus: " << rep.genus << "\n";
    out << "points at infinity: " << rep.infinity_points << "\n";
    out << "differential basis size: " << rep.basis_size << "\n";
    out << "multiplicity profile:";
    for (const auto& [i, ni] : rep.profile) out << " n_" << i << "=" << ni;
    out << "\n";
    out << "multiplicity gcd: " << rep.multiplicity_gcd << "\n";
}

void render_decompose(std::ostream& out, const DecomposeReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    print_family(out, rep.family);
    for (const auto& lv : rep.levels)
        out << "level " << lv.at("level") << ": q=" << lv.at("prime_power")
            << " dim=" << lv.at("dimension") << "\n";
    out << "total: " << rep.total << " (genus: " << rep.genus << ")\n";
}

void render_picard(std::ostream& out, const PicardReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    print_family(out, rep.family);
    out << "invariant factors:";
    for (const auto& d : rep.invariant_factors) out << " " << d;
    out << "\n";
    out << "p-rank: " << rep.p_rank << "\n";
    out << "torsion map rank: " << rep.torsion_map_rank
        << " (kernel = constants: " << (rep.kernel_is_constants ? "yes" : "no") << ")\n";
    for (const auto& row : rep.classes)
        out << "class " << row.at("index") << ": " << row.at("divisor") << "\n";
}

void render_commutant(std::ostream& out, const CommutantCliReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    out << "n=" << rep.n << " p=" << rep.p << " group=" << rep.group << "\n";
    out << "quotient commutant dimension: " << rep.v_commutant_dim
        << (rep.v_commutant_scalar ? " (scalar)" : "") << "\n";
    out << "heart simple: " << (rep.w_simple ? "yes" : "no")
        << ", heart commutant dimension: " << rep.w_commutant_dim << "\n";
    out << "doubly transitive: " << (rep.doubly_transitive ? "yes" : "no") << "\n";
    out << (rep.passed ? "PASS" : "FAIL") << "\n";
}

void render_symmetry(std::ostream& out, const SymmetrySweepReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    out << "p=" << rep.p << " r_max=" << rep.r_max << ": " << rep.cases << " (q, k) cases, "
        << (rep.all_pass ? "all pass" : "FAILURES") << "\n";
    for (const auto& sc : rep.sharp_cases)
        out << "sharp: q=" << sc.at("q") << " k=" << sc.at("k")
            << " forced prefix " << sc.at("forced_prefix") << "\n";
    for (const auto& sc : rep.failures)
        out << "FAIL: q=" << sc.at("q") << " k=" << sc.at("k") << "\n";
}

void render_multipliers(std::ostream& out, const MultiplierReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    print_family(out, rep.family);
    out << "invariant multipliers:";
    for (long long k : rep.invariant_multipliers) out << " " << k;
    out << "\n" << (rep.trivial ? "trivial (profile pins the full cyclotomic center)"
                                : "NONTRIVIAL symmetry") << "\n";
}

void render_certificate(std::ostream& out, const CertificateReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    print_family(out, rep.family);
    out << "galois group: " << rep.galois_group << " (" << rep.galois_origin << ")\n";
    for (const auto& c : rep.checks)
        out << "[" << c.at("status") << "] " << c.at("claim") << ": " << c.at("detail") << "\n";
    if (rep.passed) {
        out << "conclusion: endomorphism algebra = " << rep.endomorphism_algebra << "\n";
        for (const auto& lv : rep.levels)
            out << "  level " << lv.at("level") << ": dim " << lv.at("dimension") << ", "
                << lv.at("algebra") << ", ring " << lv.at("ring") << " [" << lv.at("provenance")
                << "]\n";
    } else {
        out << "NO CONCLUSION (a verified check failed)\n";
    }
}

void render_verify_all(std::ostream& out, const VerifyAllReport& rep, bool json) {
    if (json) {
        out << Json(rep).dump(2) << "\n";
        return;
    }
    for (const auto& r : rep.results)
        out << (r.at("status") == "pass" ? "PASS" : "FAIL") << "  " << r.at("id") << ". "
            << r.at("name") << " [" << r.at("seconds") << "s] " << r.at("detail") << "\n";
    out << rep.passed << "/" << rep.criteria << " criteria passed\n";
}

} // namespace

std::vector<Rational> parse_polynomial_line(const std::string& line) {
    std::vector<Rational> coeffs;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        auto slash = tok.find('/');
        try {
            if (slash == std::string::npos) {
                coeffs.emplace_back(BigInt(tok));
            } else {
                BigInt num(tok.substr(0, slash));
                BigInt den(tok.substr(slash + 1));
                if (den == 0) throw ValidationError("zero denominator");
                coeffs.emplace_back(num, den);
            }
        } catch (const std::runtime_error&) {
            throw ValidationError("malformed coefficient: " + tok);
        }
    }
    if (coeffs.empty()) throw ValidationError("polynomial file is empty");
    return coeffs;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"superjac: exact invariants and endomorphism certificates for y^q = f(x)"};
    app.require_subcommand(1);

    FamilyArgs fa;
    std::string format = "text";
    std::string group_str, galois_str, fault_str;
    unsigned long long seed = 1;
    long long opt_n = 0;
    long long qmax = 128, nmax = 50;
    int rmax = 0, jobs = 1;

    auto add_family_flags = [&fa](CLI::App* cmd, bool with_poly) {
        cmd->add_option("--p", fa.p, "prime p")->required();
        cmd->add_option("--r", fa.r, "exponent r of q = p^r")->required();
        cmd->add_option("--s", fa.s, "exponent s of p^s | n");
        cmd->add_option("--m", fa.m, "prime-to-p part of n");
        if (with_poly) cmd->add_option("--poly", fa.poly_path, "polynomial file (one line, ascending 'a/b' coefficients)");
    };
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* inv = app.add_subcommand("invariants", "genus, infinity fiber, basis, profile");
    add_family_flags(inv, true);
    add_format(inv);

    CLI::App* dec = app.add_subcommand("decompose", "isogeny factor dimensions per level");
    add_family_flags(dec, false);
    add_format(dec);

    CLI::App* pic = app.add_subcommand("picard", "branch Picard group, torsion map, classes");
    add_family_flags(pic, false);
    add_format(pic);

    CLI::App* comm = app.add_subcommand("commutant", "scalar-commutant report for (n, p, group)");
    comm->add_option("--n", opt_n, "degree n")->required();
    comm->add_option("--p", fa.p, "characteristic p")->required();
    comm->add_option("--group", group_str, "S or A")->required();
    comm->add_option("--seed", seed, "random seed");
    add_format(comm);

    CLI::App* sym = app.add_subcommand("symmetry",
                                       "unit constancy sweep (--rmax) or profile multipliers");
    sym->add_option("--p", fa.p, "prime p")->required();
    sym->add_option("--rmax", rmax, "sweep all q = p^r, r <= rmax");
    sym->add_option("--r", fa.r, "family r (multiplier mode)");
    sym->add_option("--s", fa.s, "family s (multiplier mode)");
    sym->add_option("--m", fa.m, "family m (multiplier mode)");
    add_format(sym);

    CLI::App* verd = app.add_subcommand("verdict", "endomorphism-algebra certificate");
    add_family_flags(verd, false);
    verd->add_option("--galois", galois_str, "asserted Galois group: S or A")->required();
    verd->add_option("--seed", seed, "random seed");
    add_format(verd);

    CLI::App* vall = app.add_subcommand("verify-all", "run the full verification grid");
    vall->add_option("--qmax", qmax, "grid bound on q");
    vall->add_option("--nmax", nmax, "grid bound on n");
    vall->add_option("--seed", seed, "random seed");
    vall->add_option("--jobs", jobs, "parallel criteria");
    vall->add_option("--inject-fault", fault_str, "testing hook")->group("");
    add_format(vall);

    std::vector<const char*> argv;
    argv.push_back("superjac");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    const bool json = format == "json";
    try {
        seed = resolve_seed(seed);
        if (inv->parsed()) {
            render_invariants(out, make_invariants_report(resolve_family(fa)), json);
        } else if (dec->parsed()) {
            render_decompose(out, make_decompose_report(resolve_family(fa)), json);
        } else if (pic->parsed()) {
            render_picard(out, make_picard_report(resolve_family(fa)), json);
        } else if (comm->parsed()) {
            if (opt_n < 5 || opt_n > 10)
                throw ValidationError("--n must be in [5, 10] for the recomputed report");
            render_commutant(out,
                             make_commutant_report(static_cast<int>(opt_n), fa.p,
                                                   parse_group(group_str), seed),
                             json);
        } else if (sym->parsed()) {
            if (rmax > 0) {
                SymmetrySweepReport rep = make_symmetry_report(fa.p, rmax);
                render_symmetry(out, rep, json);
                if (!rep.all_pass) return kExitVerification;
            } else {
                render_multipliers(out, make_multiplier_report(resolve_family(fa)), json);
            }
        } else if (verd->parsed()) {
            Certificate cert =
                endomorphism_certificate(resolve_family(fa), parse_group(galois_str), seed);
            render_certificate(out, make_certificate_report(cert), json);
            if (cert.failed()) return kExitVerification;
        } else if (vall->parsed()) {
            VerifyBounds bounds;
            bounds.q_max = qmax;
            bounds.n_max = nmax;
            FaultInjection fault;
            if (fault_str == "genus") fault.genus_offset = 1;
            else if (!fault_str.empty())
                throw ValidationError("unknown fault name: " + fault_str);
            auto results = run_verification(bounds, seed, jobs, fault);
            VerifyAllReport rep = make_verify_all_report(bounds, seed, results);
            render_verify_all(out, rep, json);
            if (rep.failed > 0) return kExitVerification;
        }
        return kExitOk;
    } catch (const RegimeError& e) {
        err << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const CheckFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}

} // namespace superjac
