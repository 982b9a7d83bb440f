#include "superjac/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superjac {

namespace {

constexpr long long kParamCap = 1LL << 31;  // keeps all index products in range

// Rational polynomials only appear during ingestion; coefficients ascending.
struct RatPoly {
    std::vector<Rational> c;

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    RatPoly derivative() const {
        RatPoly d;
        for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * Rational(k));
        d.normalize();
        return d;
    }
    // monic remainder-based Euclid
    RatPoly mod(const RatPoly& o) const {
        RatPoly r = *this;
        r.normalize();
        while (!r.is_zero() && r.degree() >= o.degree()) {
            Rational f = r.c.back() / o.c.back();
            int shift = r.degree() - o.degree();
            for (size_t k = 0; k < o.c.size(); ++k)
                r.c[static_cast<size_t>(shift) + k] -= f * o.c[k];
            r.normalize();
        }
        return r;
    }
};

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        RatPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

long long CurveFamily::infinity_count() const { return pow_ll(p, std::min(s, r)); }

std::string CurveFamily::label() const {
    std::ostringstream os;
    os << "(p=" << p << ", r=" << r << ", s=" << s << ", m=" << m << "; q=" << q << ", n=" << n << ")";
    return os.str();
}

CurveFamily make_family(long long p, int r, int s, long long m) {
    if (p < 2 || !is_prime_ll(p)) throw ValidationError("p must be prime");
    if (r < 1) throw ValidationError("r must be >= 1");
    if (s < 0) throw ValidationError("s must be >= 0");
    if (m < 1) throw ValidationError("m must be >= 1");
    if (m % p == 0) throw ValidationError("p must not divide m");
    CurveFamily f;
    f.p = p;
    f.r = r;
    f.s = s;
    f.m = m;
    f.q = pow_ll(p, r);
    f.n = m * pow_ll(p, s);
    if (f.q > kParamCap || f.n > kParamCap)
        throw ValidationError("parameters out of supported range (q, n < 2^31)");
    if (f.n < 2) throw ValidationError("degree n = m*p^s must be >= 2");
    f.theorem_regime = (f.n >= 5) && (0 < s) && (s < r);
    return f;
}

CurveFamily family_from_polynomial(const std::vector<Rational>& coeffs, long long p, int r) {
    RatPoly f{coeffs};
    f.normalize();
    if (f.degree() < 1) throw ValidationError("polynomial must be nonconstant");
    if (f.degree() < 2) throw ValidationError("polynomial degree must be >= 2");
    RatPoly g = rat_gcd(f, f.derivative());
    if (g.degree() > 0) throw ValidationError("polynomial has multiple roots");
    if (p < 2 || !is_prime_ll(p)) throw ValidationError("p must be prime");

    long long n = f.degree();
    int s = 0;
    long long m = n;
    while (m % p == 0) { m /= p; ++s; }
    CurveFamily fam = make_family(p, r, s, m);
    fam.leading_coefficient = f.c.back();
    return fam;
}

long long genus(const CurveFamily& f) {
    long long t = f.infinity_count();
    long long num = (f.q - 1) * (f.n - 1) + 1 - t;
    if (num % 2 != 0) throw InternalError("genus numerator is odd");
    return num / 2;
}

std::vector<int> infinity_points(const CurveFamily& f) {
    std::vector<int> pts(static_cast<size_t>(f.infinity_count()));
    for (size_t j = 0; j < pts.size(); ++j) pts[j] = static_cast<int>(j) + 1;
    return pts;
}

InfinityAction infinity_action(const CurveFamily& f) {
    InfinityAction act;
    long long t = f.infinity_count();
    act.shift.resize(static_cast<size_t>(t));
    for (long long j = 1; j <= t; ++j)
        act.shift[static_cast<size_t>(j - 1)] = static_cast<int>(j % t) + 1;
    if (f.s >= 1 && f.s <= f.r) {
        auto [a, b] = bezout_pair(BigInt(f.m), BigInt(pow_ll(f.p, f.r - f.s)));
        act.v_exponent = static_cast<long long>(mod_floor(-a, BigInt(f.q)));
    }
    return act;
}

BirationalChange birational_exponents(const CurveFamily& f) {
    if (!(0 < f.s && f.s < f.r))
        throw RegimeError("birational change requires 0 < s < r");
    long long prs = pow_ll(f.p, f.r - f.s);
    auto [a, b] = bezout_pair(BigInt(f.m), BigInt(prs));
    BirationalChange ch;
    // x = u^-a v^-p^{r-s}, y = u^b v^-m
    ch.forward.exponents = IntMatrix(2, 2, {-a, BigInt(-prs), b, BigInt(-f.m)});
    // u = x^-m y^{p^{r-s}}, v = x^-b y^-a
    ch.inverse.exponents = IntMatrix(2, 2, {BigInt(-f.m), BigInt(prs), -b, -a});
    return ch;
}

std::vector<std::pair<long long, long long>> differential_basis(const CurveFamily& f) {
    std::vector<std::pair<long long, long long>> basis;
    for (long long i = 1; i < f.q; ++i) {
        // n*i + q*j < n*q  <=>  j < n*(q - i)/q
        for (long long j = 1; f.n * i + f.q * j < f.n * f.q; ++j)
            basis.emplace_back(i, j);
    }
    return basis;
}

long long eigenspace_dimension(const CurveFamily& f, long long i) {
    if (i <= 0 || i >= f.q) throw ValidationError("eigenvalue index must satisfy 0 < i < q");
    return strict_floor_ll(f.n * i, f.q);
}

MultiplicityProfile multiplicity_profile(const CurveFamily& f) {
    MultiplicityProfile prof;
    prof.q = f.q;
    for (long long i = 1; i <= f.q; ++i) {
        if (i % f.p == 0) continue;
        prof.values[i] = strict_floor_ll(f.n * i, f.q);
    }
    return prof;
}

long long MultiplicityProfile::value(long long i) const {
    auto it = values.find(i);
    if (it == values.end()) throw ValidationError("profile has no value at this residue");
    return it->second;
}

std::vector<long long> MultiplicityProfile::representatives() const {
    std::vector<long long> reps;
    reps.reserve(values.size());
    for (const auto& [i, v] : values) reps.push_back(i);
    return reps;
}

long long multiplicity_gcd(const CurveFamily& f) {
    MultiplicityProfile prof = multiplicity_profile(f);
    long long g = 0;
    for (const auto& [i, v] : prof.values) g = std::gcd(g, v);

    if (f.s < f.r) {
        // m = k*p^{r-s} + c with 0 < c < p^{r-s}; the profile must match
        //   n_1 = k,  n_{p^{r-s}+1} = k p^{r-s} + k + c,  n_{p^{r-s}-1} = k p^{r-s} - k + c - 1
        long long prs = pow_ll(f.p, f.r - f.s);
        long long k = f.m / prs;
        long long c = f.m % prs;
        if (c <= 0 || c >= prs) throw InternalError("residue of m mod p^(r-s) out of range");
        if (prof.value(1) != k)
            throw InternalError("closed form for n_1 does not match the profile");
        if (prs + 1 < f.q && prof.value(prs + 1) != k * prs + k + c)
            throw InternalError("closed form for n_{p^(r-s)+1} does not match the profile");
        if (prs - 1 >= 1 && prof.value(prs - 1) != k * prs - k + c - 1)
            throw InternalError("closed form for n_{p^(r-s)-1} does not match the profile");
    }
    return g;
}

std::vector<LevelDimension> dimension_decomposition(const CurveFamily& f) {
    std::vector<LevelDimension> levels;
    for (int i = 1; i <= f.r; ++i) {
        long long pi = pow_ll(f.p, i);
        long long phi = pi - pi / f.p;
        // p^i | n exactly when i <= s; that case has one fewer moving branch point
        long long num = (i <= f.s) ? phi * (f.n - 2) : phi * (f.n - 1);
        if (num % 2 != 0) throw InternalError("level dimension numerator is odd");
        levels.push_back({i, pi, num / 2});
    }
    return levels;
}

} // namespace superjac
