#include "superjac/modrep.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace superjac {

Perm perm_identity(int n) {
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<size_t>(a[i])];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return r;
}

bool perm_is_even(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    int transpositions = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(a[j])) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

Perm perm_cycle(int n, const std::vector<int>& pts) {
    Perm p = perm_identity(n);
    for (size_t k = 0; k < pts.size(); ++k) {
        int from = pts[k] - 1;
        int to = pts[(k + 1) % pts.size()] - 1;
        if (from < 0 || from >= n) throw ValidationError("cycle point out of range");
        p[static_cast<size_t>(from)] = to;
    }
    return p;
}

// ---------------------------------------------------------------------------
// stabilizer chain (Schreier-Sims), sufficient for desk-scale degrees

namespace {

struct StabChain {
    int n;
    std::vector<int> base;
    std::vector<std::vector<Perm>> gens;            // gens[i] fix base[0..i-1]
    std::vector<std::map<int, Perm>> transversal;   // point -> rep moving base[i] to it

    explicit StabChain(int degree) : n(degree) {}

    void recompute_orbit(size_t lvl) {
        transversal[lvl].clear();
        transversal[lvl][base[lvl]] = perm_identity(n);
        std::vector<int> queue{base[lvl]};
        while (!queue.empty()) {
            int pt = queue.back();
            queue.pop_back();
            Perm rep = transversal[lvl][pt];
            for (const Perm& g : gens[lvl]) {
                int img = g[static_cast<size_t>(pt)];
                if (!transversal[lvl].count(img)) {
                    transversal[lvl][img] = perm_compose(rep, g);
                    queue.push_back(img);
                }
            }
        }
    }

    // strips g through the chain; returns residue and the level reached
    std::pair<Perm, size_t> sift(Perm g) const {
        for (size_t i = 0; i < base.size(); ++i) {
            int img = g[static_cast<size_t>(base[i])];
            auto it = transversal[i].find(img);
            if (it == transversal[i].end()) return {g, i};
            g = perm_compose(g, perm_inverse(it->second));
        }
        return {g, base.size()};
    }

    void insert(const Perm& g) {
        auto [res, lvl] = sift(g);
        if (res == perm_identity(n)) return;
        if (lvl == base.size()) {
            int moved = -1;
            for (int i = 0; i < n; ++i)
                if (res[static_cast<size_t>(i)] != i) { moved = i; break; }
            base.push_back(moved);
            gens.emplace_back();
            transversal.emplace_back();
        }
        for (size_t i = 0; i <= lvl; ++i) gens[i].push_back(res);
        for (size_t i = 0; i <= lvl; ++i) recompute_orbit(i);
    }

    // one closure pass over all Schreier generators; true when stable
    bool pass() {
        for (size_t i = 0; i < base.size(); ++i) {
            recompute_orbit(i);
            for (const auto& [pt, rep] : transversal[i]) {
                for (const Perm& g : gens[i]) {
                    Perm to = transversal[i].at(g[static_cast<size_t>(pt)]);
                    Perm schreier = perm_compose(perm_compose(rep, g), perm_inverse(to));
                    auto [res, lvl] = sift(schreier);
                    if (!(res == perm_identity(n))) {
                        insert(schreier);
                        return false;
                    }
                }
            }
        }
        return true;
    }

    BigInt order() {
        while (!pass()) {}
        BigInt o = 1;
        for (size_t i = 0; i < base.size(); ++i) o *= BigInt(transversal[i].size());
        return o;
    }
};

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

BigInt group_order(const PermGenerators& gens) {
    StabChain chain(gens.n);
    for (const Perm& g : gens.generators) {
        if (static_cast<int>(g.size()) != gens.n)
            throw ValidationError("generator degree mismatch");
        chain.insert(g);
    }
    return chain.order();
}

PermGenerators standard_generators(int n, GroupLabel label) {
    if (n < 3) throw ValidationError("standard generators need n >= 3");
    PermGenerators gens;
    gens.n = n;
    gens.label = label;
    if (label == GroupLabel::SymmetricFull) {
        gens.generators.push_back(perm_cycle(n, {1, 2}));
        std::vector<int> full(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i + 1;
        gens.generators.push_back(perm_cycle(n, full));
    } else if (label == GroupLabel::Alternating) {
        gens.generators.push_back(perm_cycle(n, {1, 2, 3}));
        if (n > 3) {
            std::vector<int> pts;
            if (n % 2 == 1)
                for (int i = 1; i <= n; ++i) pts.push_back(i);
            else
                for (int i = 2; i <= n; ++i) pts.push_back(i);
            gens.generators.push_back(perm_cycle(n, pts));
        }
        for (const Perm& g : gens.generators)
            if (!perm_is_even(g)) throw InternalError("alternating generator is odd");
    } else {
        throw ValidationError("standard_generators: label must be S or A");
    }
    if (n <= 10) {
        BigInt expect = factorial(n);
        if (label == GroupLabel::Alternating) expect /= 2;
        BigInt got = group_order(gens);
        if (got != expect)
            throw InternalError("standard generators produce a group of wrong order");
    }
    return gens;
}

bool is_doubly_transitive(const PermGenerators& gens) {
    const int n = gens.n;
    if (n > 12) throw ValidationError("double transitivity check limited to n <= 12");
    if (n < 2) return false;
    auto enc = [n](int a, int b) { return a * n + b; };
    std::vector<bool> seen(static_cast<size_t>(n) * n, false);
    std::vector<std::pair<int, int>> queue{{0, 1}};
    seen[static_cast<size_t>(enc(0, 1))] = true;
    size_t count = 1;
    while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        for (const Perm& g : gens.generators) {
            int ia = g[static_cast<size_t>(a)], ib = g[static_cast<size_t>(b)];
            if (!seen[static_cast<size_t>(enc(ia, ib))]) {
                seen[static_cast<size_t>(enc(ia, ib))] = true;
                ++count;
                queue.emplace_back(ia, ib);
            }
        }
    }
    return count == static_cast<size_t>(n) * (n - 1);
}

// ---------------------------------------------------------------------------
// permutation modules

namespace {

// Action of g on the quotient V = F_p^n / constants in the basis of the
// first n-1 indicator classes; the class of the last indicator is minus the
// sum of the basis classes.
FpMatrix quotient_action(const Perm& g, long long p, int n) {
    FpMatrix m(p, n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i) {
        int img = g[static_cast<size_t>(i)];
        if (img < n - 1) {
            m.set(img, i, 1);
        } else {
            for (int k = 0; k < n - 1; ++k) m.set(k, i, -1);
        }
    }
    return m;
}

FpMatrix deg0_action(const Perm& g, long long p, int n) {
    // basis phi_i - phi_n for i < n; g(phi_i - phi_n) = b_{g(i)} - b_{g(n)}
    // with b_n read as 0
    FpMatrix m(p, n - 1, n - 1);
    int gn = g[static_cast<size_t>(n - 1)];
    for (int i = 0; i < n - 1; ++i) {
        int gi = g[static_cast<size_t>(i)];
        if (gi < n - 1) m.set(gi, i, m.at(gi, i) + 1);
        if (gn < n - 1) m.set(gn, i, m.at(gn, i) - 1);
    }
    return m;
}

// Echelon basis of W = image of the sum-zero module inside V.
EchelonBasis heart_basis(long long p, int n) {
    EchelonBasis basis(p, n - 1);
    for (int i = 0; i < n - 1; ++i) {
        // class of phi_i - phi_n: e_i + (e_0 + ... + e_{n-2})
        FpVec v(static_cast<size_t>(n - 1), 1);
        v[static_cast<size_t>(i)] = 2 % p;
        basis.add(std::move(v));
    }
    return basis;
}

} // namespace

FpModule build_module(const PermGenerators& gens, long long p, ModuleTag tag) {
    if (!is_prime_ll(p)) throw ValidationError("module characteristic must be prime");
    const int n = gens.n;
    FpModule mod;
    mod.p = p;
    mod.tag = tag;
    switch (tag) {
        case ModuleTag::FullPerm: {
            mod.dim = n;
            for (const Perm& g : gens.generators) {
                FpMatrix m(p, n, n);
                for (int i = 0; i < n; ++i) m.set(g[static_cast<size_t>(i)], i, 1);
                mod.action.push_back(std::move(m));
            }
            return mod;
        }
        case ModuleTag::Deg0: {
            mod.dim = n - 1;
            for (const Perm& g : gens.generators) mod.action.push_back(deg0_action(g, p, n));
            return mod;
        }
        case ModuleTag::V: {
            mod.dim = n - 1;
            for (const Perm& g : gens.generators) mod.action.push_back(quotient_action(g, p, n));
            return mod;
        }
        case ModuleTag::W: {
            if (n % p != 0)
                throw ValidationError("the heart W needs p | n");
            EchelonBasis basis = heart_basis(p, n);
            mod.dim = basis.size();
            if (mod.dim != n - 2) throw InternalError("heart has unexpected dimension");
            for (const Perm& g : gens.generators) {
                FpMatrix big = quotient_action(g, p, n);
                FpMatrix small(p, mod.dim, mod.dim);
                for (int col = 0; col < mod.dim; ++col) {
                    FpVec img = big.apply(basis.rows()[static_cast<size_t>(col)]);
                    FpVec coords = basis.coordinates(img);  // throws if W not invariant
                    for (int row = 0; row < mod.dim; ++row)
                        small.set(row, col, coords[static_cast<size_t>(row)]);
                }
                mod.action.push_back(std::move(small));
            }
            return mod;
        }
    }
    throw ValidationError("unknown module tag");
}

Commutant commutant(const FpModule& mod) {
    const int d = mod.dim;
    const long long p = mod.p;
    // unknowns theta_{ij}; equations (theta g - g theta)_{ij} = 0 per generator
    FpMatrix sys(p, static_cast<int>(mod.action.size()) * d * d, d * d);
    int row = 0;
    for (const FpMatrix& g : mod.action) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                for (int k = 0; k < d; ++k) {
                    // + theta_{ik} g_{kj}
                    sys.set(row, i * d + k, sys.at(row, i * d + k) + g.at(k, j));
                    // - g_{ik} theta_{kj}
                    sys.set(row, k * d + j, sys.at(row, k * d + j) - g.at(i, k));
                }
                ++row;
            }
    }
    Commutant c;
    for (const FpVec& sol : fp_nullspace(sys)) {
        FpMatrix theta(p, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) theta.set(i, j, sol[static_cast<size_t>(i * d + j)]);
        c.basis.push_back(std::move(theta));
    }
    c.dimension = static_cast<int>(c.basis.size());
    return c;
}

EchelonBasis spin(const std::vector<FpMatrix>& action, long long p, const FpVec& v) {
    const int d = static_cast<int>(v.size());
    EchelonBasis basis(p, d);
    std::vector<FpVec> queue;
    if (basis.add(v)) queue.push_back(v);
    while (!queue.empty()) {
        FpVec w = std::move(queue.back());
        queue.pop_back();
        for (const FpMatrix& g : action) {
            FpVec img = g.apply(w);
            if (basis.add(img)) queue.push_back(std::move(img));
        }
    }
    return basis;
}

namespace {

long long projective_count(long long p, int k) {
    // (p^k - 1)/(p - 1), capped to keep meataxe enumeration bounded
    long long total = 1, power = 1;
    for (int i = 1; i < k; ++i) {
        power *= p;
        total += power;
        if (total > (1 << 20)) return total;
    }
    return total;
}

// all projective representatives of the span of basis vectors (first nonzero
// coordinate in the coefficient pattern equal to 1)
std::vector<FpVec> projective_points(const std::vector<FpVec>& basis, long long p) {
    std::vector<FpVec> pts;
    const int k = static_cast<int>(basis.size());
    const size_t d = basis.empty() ? 0 : basis[0].size();
    std::vector<long long> coef(static_cast<size_t>(k), 0);
    // iterate over tuples whose first nonzero entry is 1
    for (int lead = 0; lead < k; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[static_cast<size_t>(lead)] = 1;
        while (true) {
            FpVec v(d, 0);
            for (int t = lead; t < k; ++t) {
                if (coef[static_cast<size_t>(t)] == 0) continue;
                for (size_t j = 0; j < d; ++j)
                    v[j] = (v[j] + coef[static_cast<size_t>(t)] * basis[static_cast<size_t>(t)][j]) % p;
            }
            pts.push_back(std::move(v));
            int t = k - 1;
            while (t > lead && coef[static_cast<size_t>(t)] == p - 1)
                coef[static_cast<size_t>(t--)] = 0;
            if (t == lead) break;
            ++coef[static_cast<size_t>(t)];
        }
    }
    return pts;
}

FpMatrix random_algebra_element(const FpModule& mod, std::mt19937_64& rng) {
    const long long p = mod.p;
    const int d = mod.dim;
    FpMatrix acc(p, d, d);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        FpMatrix word = FpMatrix::identity(p, d);
        int len = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < len; ++l)
            word = word * mod.action[rng() % mod.action.size()];
        acc = acc + word.scaled(1 + static_cast<long long>(rng() % (p - 1)));
    }
    // a random scalar shift often produces a singular, nonzero element
    acc = acc + FpMatrix::identity(p, d).scaled(static_cast<long long>(rng() % p));
    return acc;
}

std::vector<FpVec> annihilator(const std::vector<FpVec>& dual_rows, long long p, int dim) {
    FpMatrix m(p, static_cast<int>(dual_rows.size()), dim);
    for (size_t i = 0; i < dual_rows.size(); ++i)
        for (int j = 0; j < dim; ++j) m.set(static_cast<int>(i), j, dual_rows[i][static_cast<size_t>(j)]);
    return fp_nullspace(m);
}

} // namespace

SimplicityResult is_simple(const FpModule& mod, unsigned long long seed, int trials) {
    const int d = mod.dim;
    const long long p = mod.p;
    if (d > 30) throw ValidationError("simplicity test limited to dim <= 30");
    if (d == 0) throw ValidationError("simplicity is undefined for the zero module");
    SimplicityResult res;
    if (d == 1) {
        res.simple = true;
        return res;
    }
    if (mod.action.empty()) {
        // with no action every line is invariant
        res.simple = false;
        FpVec e0(static_cast<size_t>(d), 0);
        e0[0] = 1;
        res.witness = std::vector<FpVec>{e0};
        return res;
    }

    std::vector<FpMatrix> dual;
    for (const FpMatrix& g : mod.action) dual.push_back(g.transposed());
    std::mt19937_64 rng(seed);

    for (int trial = 0; trial < trials; ++trial) {
        res.trials_used = trial + 1;
        FpMatrix a = random_algebra_element(mod, rng);
        std::vector<FpVec> null = fp_nullspace(a);
        if (null.empty() || static_cast<int>(null.size()) == d) continue;
        const int k = static_cast<int>(null.size());

        bool full_enumeration = projective_count(p, k) <= 4096;
        std::vector<FpVec> candidates =
            full_enumeration ? projective_points(null, p) : null;
        for (const FpVec& v : candidates) {
            EchelonBasis sub = spin(mod.action, p, v);
            if (sub.size() > 0 && sub.size() < d) {
                res.simple = false;
                res.witness = sub.rows();
                return res;
            }
        }
        // dual side: if a proper submodule misses N(a) entirely, it is
        // contained in the image of a, so every dual kernel vector spins
        // inside its annihilator
        std::vector<FpVec> dual_null = fp_nullspace(a.transposed());
        if (dual_null.empty()) throw InternalError("transpose lost the nullity");
        EchelonBasis dual_sub = spin(dual, p, dual_null.front());
        if (dual_sub.size() < d) {
            res.simple = false;
            res.witness = annihilator(dual_sub.rows(), p, d);
            return res;
        }
        if (full_enumeration) {
            // every kernel line spins to the whole module and the dual spin
            // is full: the module is simple
            res.simple = true;
            return res;
        }
    }
    throw InconclusiveError("simplicity test exhausted its trial budget");
}

CommutantReport commutant_report(int n, long long p, GroupLabel label, unsigned long long seed) {
    if (n < 5) throw ValidationError("scalar-commutant report needs n >= 5");
    if (n % p != 0) throw ValidationError("scalar-commutant report needs p | n");
    if (label == GroupLabel::Custom)
        throw ValidationError("label must be the symmetric or alternating group");
    CommutantReport rep;
    rep.n = n;
    rep.p = p;
    rep.label = label;
    PermGenerators gens = standard_generators(n, label);

    FpModule v = build_module(gens, p, ModuleTag::V);
    Commutant cv = commutant(v);
    rep.v_commutant_dim = cv.dimension;
    rep.v_commutant_scalar = cv.dimension == 1 && cv.basis.front().is_scalar();

    FpModule w = build_module(gens, p, ModuleTag::W);
    rep.w_simple = is_simple(w, seed).simple;
    rep.w_commutant_dim = commutant(w).dimension;
    rep.doubly_transitive = is_doubly_transitive(gens);

    rep.passed = rep.v_commutant_scalar && rep.w_simple && rep.w_commutant_dim == 1 &&
                 rep.doubly_transitive;
    return rep;
}

} // namespace superjac
