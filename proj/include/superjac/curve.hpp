#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superjac/intmatrix.hpp"
#include "superjac/numeric.hpp"

namespace superjac {

/// Parameter tuple for the family of curves y^q = f(x) with q = p^r and
/// deg f = n = m * p^s, p prime not dividing m.
struct CurveFamily {
    long long p = 0;
    int r = 0;
    int s = 0;
    long long m = 0;
    long long q = 0;  // p^r
    long long n = 0;  // m * p^s
    bool theorem_regime = false;  // n >= 5 and 0 < s < r
    std::optional<Rational> leading_coefficient;  // provenance only

    bool operator==(const CurveFamily& o) const {
        return p == o.p && r == o.r && s == o.s && m == o.m;
    }
    // Count of points at infinity on the smooth model: p^min(s, r) = gcd(n, q).
    long long infinity_count() const;
    std::string label() const;
};

CurveFamily make_family(long long p, int r, int s, long long m);

/// Derive (p, r, s, m) from deg f = m * p^s for a squarefree rational
/// polynomial given by ascending coefficients. Galois-group facts are never
/// computed here.
CurveFamily family_from_polynomial(const std::vector<Rational>& coeffs, long long p, int r);

/// Monomial coordinate change (out1, out2) = (in1^e11 in2^e12, in1^e21 in2^e22).
struct MonomialMap {
    IntMatrix exponents;  // 2x2
    BigInt determinant() const { return exponents.determinant(); }
};

struct BirationalChange {
    MonomialMap forward;   // (x, y) in terms of (u, v)
    MonomialMap inverse;   // (u, v) in terms of (x, y)
};

/// Action of the order-q automorphism (x, y) -> (x, zeta_q y) on the points
/// at infinity: a cyclic index shift plus, inside 0 < s < r, the exponent of
/// the zeta_q multiplier on the v-coordinate.
struct InfinityAction {
    std::vector<int> shift;  // 1-based images: shift[j-1] is the image of j
    std::optional<long long> v_exponent;  // -a mod q; empty when s = 0
};

/// Multiplicities i -> n_i over the residues in [1, q] prime to p.
struct MultiplicityProfile {
    long long q = 0;
    std::map<long long, long long> values;

    bool operator==(const MultiplicityProfile&) const = default;
    long long value(long long i) const;
    std::vector<long long> representatives() const;
};

struct LevelDimension {
    int level = 0;            // i in 1..r
    long long prime_power = 0;  // p^i
    long long dimension = 0;    // dim of the level-i isogeny factor
    bool operator==(const LevelDimension&) const = default;
};

long long genus(const CurveFamily& f);

/// Labels of the points at infinity; label j stands for u-coordinate zeta^j.
std::vector<int> infinity_points(const CurveFamily& f);

InfinityAction infinity_action(const CurveFamily& f);

/// The unimodular exponent matrices of the coordinate change trivializing the
/// infinity fiber; only defined for 0 < s < r.
BirationalChange birational_exponents(const CurveFamily& f);

/// All (i, j) with i > 0, j > 0, n*i + q*j < n*q, lexicographically sorted.
/// The count equals the genus.
std::vector<std::pair<long long, long long>> differential_basis(const CurveFamily& f);

/// n_i = strict_floor(n*i/q), the multiplicity of the eigenvalue zeta_q^{-i}
/// on holomorphic differentials. Requires 0 < i < q.
long long eigenspace_dimension(const CurveFamily& f, long long i);

MultiplicityProfile multiplicity_profile(const CurveFamily& f);

/// gcd of the nonzero profile values; also cross-checks the closed forms for
/// n_1, n_{p^{r-s}+1}, n_{p^{r-s}-1} when s < r. Equals 1 whenever 0 < s < r.
long long multiplicity_gcd(const CurveFamily& f);

/// Dimensions of the isogeny factors at levels 1..r; they sum to the genus.
std::vector<LevelDimension> dimension_decomposition(const CurveFamily& f);

} // namespace superjac
