#include "superjac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include "superjac/divisor.hpp"
#include "superjac/modrep.hpp"
#include "superjac/multanalysis.hpp"

namespace superjac {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
CriterionResult timed(int id, const std::string& name, F&& body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    auto start = Clock::now();
    try {
        auto [ok, detail] = body();
        res.passed = ok;
        res.detail = detail;
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = elapsed(start);
    return res;
}

std::string family_tag(const CurveFamily& f) {
    std::ostringstream os;
    os << "p=" << f.p << ",r=" << f.r << ",s=" << f.s << ",m=" << f.m;
    return os.str();
}

} // namespace

std::vector<CurveFamily> family_grid(long long q_max, long long n_max) {
    std::vector<CurveFamily> grid;
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        for (int r = 1; pow_ll(p, r) <= q_max; ++r) {
            for (int s = 0; pow_ll(p, s) <= n_max; ++s) {
                for (long long m = 1; m * pow_ll(p, s) <= n_max; ++m) {
                    if (m % p == 0) continue;
                    if (m * pow_ll(p, s) < 2) continue;
                    grid.push_back(make_family(p, r, s, m));
                }
            }
        }
    }
    return grid;
}

CriterionResult check_genus_triple_identity(const VerifyBounds& b, const FaultInjection& fault) {
    return timed(1, "genus triple identity", [&]() -> std::pair<bool, std::string> {
        auto grid = family_grid(b.q_max, b.n_max);
        for (const CurveFamily& f : grid) {
            long long formula = genus(f) + fault.genus_offset;
            long long basis = static_cast<long long>(differential_basis(f).size());
            long long sum = 0;
            for (long long i = 1; i < f.q; ++i) sum += eigenspace_dimension(f, i);
            if (formula != basis || basis != sum) {
                std::ostringstream os;
                os << "mismatch at " << family_tag(f) << ": formula " << formula << ", lattice "
                   << basis << ", eigenvalue sum " << sum;
                return {false, os.str()};
            }
        }
        std::ostringstream os;
        os << "formula = lattice count = eigenvalue multiplicity sum on " << grid.size()
           << " families";
        return {true, os.str()};
    });
}

CriterionResult check_decomposition_sum(const VerifyBounds& b) {
    return timed(2, "isogeny dimension sum", [&]() -> std::pair<bool, std::string> {
        auto grid = family_grid(b.q_max, b.n_max);
        // frozen spot values
        {
            auto lv = dimension_decomposition(make_family(3, 2, 1, 2));
            if (lv.size() != 2 || lv[0].dimension != 4 || lv[1].dimension != 15)
                return {false, "spot family (3,2,1,2) decomposition is not (4, 15)"};
            auto lw = dimension_decomposition(make_family(2, 3, 1, 3));
            if (lw.size() != 3 || lw[0].dimension != 2 || lw[1].dimension != 5 ||
                lw[2].dimension != 10)
                return {false, "spot family (2,3,1,3) decomposition is not (2, 5, 10)"};
        }
        for (const CurveFamily& f : grid) {
            long long total = 0;
            for (const LevelDimension& lv : dimension_decomposition(f)) total += lv.dimension;
            if (total != genus(f)) {
                std::ostringstream os;
                os << "level sum " << total << " != genus " << genus(f) << " at " << family_tag(f);
                return {false, os.str()};
            }
        }
        std::ostringstream os;
        os << "level dimensions sum to the genus on " << grid.size() << " families";
        return {true, os.str()};
    });
}

CriterionResult check_multiplicity_gcd(const VerifyBounds& b) {
    return timed(3, "multiplicity gcd is 1", [&]() -> std::pair<bool, std::string> {
        long long count = 0;
        for (const CurveFamily& f : family_grid(b.q_max, b.n_max)) {
            if (!(0 < f.s && f.s < f.r)) continue;
            ++count;
            long long g = multiplicity_gcd(f);  // also cross-checks closed forms
            if (g != 1) {
                std::ostringstream os;
                os << "gcd " << g << " at " << family_tag(f);
                return {false, os.str()};
            }
        }
        std::ostringstream os;
        os << "gcd of nonzero multiplicities is 1 on " << count << " in-regime families";
        return {true, os.str()};
    });
}

CriterionResult check_principality_oracle(const VerifyBounds& b, unsigned long long seed) {
    return timed(4, "principality criterion vs function lattice",
                 [&]() -> std::pair<bool, std::string> {
        std::mt19937_64 rng(seed);
        long long families = 0, vectors = 0;
        for (const CurveFamily& f : family_grid(std::min(b.q_max, b.divisor_q_max),
                                                std::min(b.n_max, b.divisor_n_max))) {
            if (f.s >= f.r) continue;
            ++families;
            RowLattice lattice(principal_function_lattice(f));
            // lattice equality in both directions on the generators
            {
                IntMatrix gens = principal_function_lattice(f);
                for (int i = 0; i < gens.rows(); ++i) {
                    Divisor d(f);
                    for (int j = 0; j < gens.cols(); ++j)
                        d.add(Point::branch(j + 1), gens.at(i, j));
                    if (!is_principal_on_branch(f, d))
                        return {false, "an explicit function divisor fails the congruence test"};
                }
            }
            const long long n = f.n;
            std::uniform_int_distribution<long long> dist(-2 * f.q, 2 * f.q);
            for (int t = 0; t < b.random_vectors; ++t) {
                // degree-0 vector with entries in [-2q, 2q]
                std::vector<BigInt> v;
                while (true) {
                    v.assign(static_cast<size_t>(n), BigInt(0));
                    long long acc = 0;
                    for (size_t i = 0; i + 1 < v.size(); ++i) {
                        long long x = dist(rng);
                        v[i] = x;
                        acc += x;
                    }
                    if (-acc >= -2 * f.q && -acc <= 2 * f.q) {
                        v.back() = -acc;
                        break;
                    }
                }
                ++vectors;
                Divisor d(f);
                for (size_t i = 0; i < v.size(); ++i)
                    d.add(Point::branch(static_cast<int>(i) + 1), v[i]);
                bool by_criterion = is_principal_on_branch(f, d);
                bool by_lattice = lattice.contains(v);
                if (by_criterion != by_lattice) {
                    std::ostringstream os;
                    os << "criterion and lattice disagree at " << family_tag(f) << " on "
                       << d.to_string();
                    return {false, os.str()};
                }
            }
        }
        std::ostringstream os;
        os << "congruence criterion matches lattice membership on " << vectors
           << " random degree-0 vectors over " << families << " families";
        return {true, os.str()};
    });
}

CriterionResult check_torsion_suite(const VerifyBounds& b) {
    return timed(5, "branch torsion suite", [&]() -> std::pair<bool, std::string> {
        long long families = 0;
        for (const CurveFamily& f : family_grid(std::min(b.q_max, b.divisor_q_max),
                                                std::min(b.n_max, b.divisor_n_max))) {
            if (!(0 < f.s && f.s < f.r)) continue;
            ++families;
            PicardStructure pic = picard_structure(f);
            if (pic.p_rank != f.n - 1) {
                std::ostringstream os;
                os << "Picard p-rank " << pic.p_rank << " != " << f.n - 1 << " at "
                   << family_tag(f);
                return {false, os.str()};
            }
            TorsionMap tm = torsion_map(f);
            bool kernel_ok = tm.kernel.size() == 1;
            if (kernel_ok)
                for (long long x : tm.kernel.front())
                    kernel_ok = kernel_ok && x == tm.kernel.front().front() && x != 0;
            if (!kernel_ok || tm.rank != f.n - 1) {
                std::ostringstream os;
                os << "indicator map defect at " << family_tag(f);
                return {false, os.str()};
            }
            // canonical classes: closed form and exact order p
            auto classes = p_torsion_classes(f);
            auto [a, bz] = bezout_pair(BigInt(f.m), BigInt(pow_ll(f.p, f.r - f.s)));
            BigInt lead = a * f.m * pow_ll(f.p, f.r - 1);
            BigInt shared = a * pow_ll(f.p, f.r - f.s - 1);
            for (int i = 1; i <= f.n; ++i) {
                const Divisor& d = classes[static_cast<size_t>(i - 1)];
                Divisor expect(f);
                for (int k = 1; k <= f.n; ++k) expect.add(Point::branch(k), -shared);
                expect.add(Point::branch(i), lead);
                if (!(d == expect)) {
                    std::ostringstream os;
                    os << "canonical class " << i << " differs from the closed form at "
                       << family_tag(f);
                    return {false, os.str()};
                }
                if (is_principal_on_branch(f, d) ||
                    !is_principal_on_branch(f, d.scaled(BigInt(f.p)))) {
                    std::ostringstream os;
                    os << "class " << i << " does not have order exactly p at " << family_tag(f);
                    return {false, os.str()};
                }
            }
        }
        std::ostringstream os;
        os << "p-rank, indicator map, and order-p classes verified on " << families
           << " families";
        return {true, os.str()};
    });
}

CriterionResult check_commutant_grid(const VerifyBounds& b, unsigned long long seed) {
    return timed(6, "scalar commutant grid", [&]() -> std::pair<bool, std::string> {
        (void)b;
        long long cases = 0;
        for (int n = 5; n <= 10; ++n)
            for (long long p : {2LL, 3LL, 5LL}) {
                if (n % p != 0) continue;
                for (GroupLabel label : {GroupLabel::SymmetricFull, GroupLabel::Alternating}) {
                    ++cases;
                    CommutantReport rep = commutant_report(n, p, label, seed);
                    if (!rep.passed) {
                        std::ostringstream os;
                        os << "commutant report failed for n=" << n << ", p=" << p << ", "
                           << group_label_name(label);
                        return {false, os.str()};
                    }
                }
            }
        std::ostringstream os;
        os << "quotient commutant scalar and heart simple on " << cases << " (n, p, group) cases";
        return {true, os.str()};
    });
}

CriterionResult check_constancy_sweeps(const VerifyBounds& b) {
    return timed(7, "unit constancy sweeps", [&]() -> std::pair<bool, std::string> {
        long long cases = 0;
        // odd prime powers up to the bound
        for (long long p = 3; p <= b.odd_sweep_q_max; p += 2) {
            if (!is_prime_ll(p)) continue;
            int r_max = 0;
            while (pow_ll(p, r_max + 1) <= b.odd_sweep_q_max) ++r_max;
            if (r_max == 0) continue;
            SweepReport rep = constancy_sweep(p, r_max);
            cases += rep.cases;
            if (!rep.all_pass) {
                std::ostringstream os;
                os << "odd sweep failure at q=" << rep.failures.front().q
                   << ", k=" << rep.failures.front().k;
                return {false, os.str()};
            }
        }
        // powers of two
        int r_max = 0;
        while (pow_ll(2, r_max + 1) <= b.even_sweep_q_max) ++r_max;
        SweepReport rep = constancy_sweep(2, r_max);
        cases += rep.cases;
        if (!rep.all_pass) {
            std::ostringstream os;
            os << "even sweep failure at q=" << rep.failures.front().q
               << ", k=" << rep.failures.front().k;
            return {false, os.str()};
        }
        // every non-fully-constant case must have produced a valid witness
        for (const SweepCase& sc : rep.sharp_cases) {
            ConstancyResult c = monotone_constancy(sc.q, 2, sc.k);
            if (!c.witness) return {false, "sharp case without witness"};
            const auto& w = *c.witness;
            long long prev = -1;
            bool nondecreasing = true, invariant = true, constant = true;
            for (const auto& [u, val] : w) {
                if (val < prev) nondecreasing = false;
                prev = val;
                long long ku = (u * sc.k) % sc.q;
                if (ku == 0) ku = sc.q;
                if (w.at(ku) != val) invariant = false;
                if (val != w.begin()->second) constant = false;
            }
            if (!nondecreasing || !invariant || constant) {
                std::ostringstream os;
                os << "invalid witness at q=" << sc.q << ", k=" << sc.k;
                return {false, os.str()};
            }
        }
        std::ostringstream os;
        os << "constancy forced in all " << cases << " (q, k) cases; " << rep.sharp_cases.size()
           << " sharp p=2 cases carry validated witnesses";
        return {true, os.str()};
    });
}

CriterionResult check_profile_multipliers(const VerifyBounds& b) {
    return timed(8, "profile multiplier triviality", [&]() -> std::pair<bool, std::string> {
        long long count = 0;
        for (const CurveFamily& f : family_grid(b.q_max, b.n_max)) {
            if (!f.theorem_regime) continue;
            ++count;
            std::set<long long> ks = invariant_multipliers(multiplicity_profile(f), f.p);
            if (ks != std::set<long long>{1}) {
                std::ostringstream os;
                os << "nontrivial multiplier at " << family_tag(f);
                return {false, os.str()};
            }
        }
        std::ostringstream os;
        os << "multiplier group trivial on " << count << " theorem-regime families";
        return {true, os.str()};
    });
}

CriterionResult check_birational_coherence(const VerifyBounds& b) {
    return timed(9, "birational coherence", [&]() -> std::pair<bool, std::string> {
        long long count = 0;
        for (const CurveFamily& f : family_grid(b.q_max, b.n_max)) {
            if (!(0 < f.s && f.s < f.r)) continue;
            ++count;
            BirationalChange ch = birational_exponents(f);
            IntMatrix comp = ch.inverse.exponents * ch.forward.exponents;
            if (!comp.is_identity())
                return {false, "exponent composition is not the identity at " + family_tag(f)};
            if (ch.forward.determinant() != 1 || ch.inverse.determinant() != 1)
                return {false, "exponent determinant is not 1 at " + family_tag(f)};
            InfinityAction act = infinity_action(f);
            long long t = f.infinity_count();
            // transitivity and order of the shift
            std::vector<int> pos(static_cast<size_t>(t));
            for (int j = 1; j <= t; ++j) pos[static_cast<size_t>(j - 1)] = j;
            std::vector<bool> seen(static_cast<size_t>(t) + 1, false);
            int cur = 1;
            for (long long step = 0; step < t; ++step) {
                seen[static_cast<size_t>(cur)] = true;
                cur = act.shift[static_cast<size_t>(cur - 1)];
            }
            for (int j = 1; j <= t; ++j)
                if (!seen[static_cast<size_t>(j)])
                    return {false, "shift is not transitive at " + family_tag(f)};
            // stabilizer of index 1 = powers divisible by p^s
            cur = 1;
            for (long long step = 1; step <= t; ++step) {
                cur = act.shift[static_cast<size_t>(cur - 1)];
                bool fixes = cur == 1;
                if (fixes != (step % t == 0))
                    return {false, "stabilizer mismatch at " + family_tag(f)};
            }
        }
        std::ostringstream os;
        os << "coordinate change involutive with unit determinant on " << count << " families";
        return {true, os.str()};
    });
}

std::vector<CriterionResult> run_verification(const VerifyBounds& b, unsigned long long seed,
                                              int jobs, const FaultInjection& fault) {
    std::vector<std::function<CriterionResult()>> tasks = {
        [&] { return check_genus_triple_identity(b, fault); },
        [&] { return check_decomposition_sum(b); },
        [&] { return check_multiplicity_gcd(b); },
        [&] { return check_principality_oracle(b, seed); },
        [&] { return check_torsion_suite(b); },
        [&] { return check_commutant_grid(b, seed); },
        [&] { return check_constancy_sweeps(b); },
        [&] { return check_profile_multipliers(b); },
        [&] { return check_birational_coherence(b); },
    };
    std::vector<CriterionResult> results(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
        return results;
    }
    // fan out, merge in criterion order
    std::vector<std::future<CriterionResult>> futures;
    futures.reserve(tasks.size());
    for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    return results;
}

} // namespace superjac
