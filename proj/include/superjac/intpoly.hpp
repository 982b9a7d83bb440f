#pragma once

#include <string>
#include <vector>

#include "superjac/numeric.hpp"

namespace superjac {

/// Dense univariate polynomial over Z, coefficients in ascending degree order.
/// Trailing zero coefficients are stripped; the zero polynomial has an empty
/// coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({BigInt(1)}); }
    // c * x^k
    static IntPoly monomial(const BigInt& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coeff(int k) const;
    const BigInt& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    // Euclidean division; requires the leading coefficient of d to be +-1.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const;

    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

/// x^{q-1} + ... + x + 1 with q = p^r, i.e. (x^q - 1)/(x - 1).
IntPoly geometric_series_poly(long long p, int r);

/// The p^i-th cyclotomic polynomial, sum of x^{j*p^{i-1}} for j = 0..p-1.
IntPoly cyclotomic_poly(long long p, int i);

} // namespace superjac
