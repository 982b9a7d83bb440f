#include "superjac/intpoly.hpp"

#include <sstream>

namespace superjac {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(const BigInt& c, int k) {
    if (c == 0) return zero();
    std::vector<BigInt> v(static_cast<size_t>(k) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < o.coeffs_.size()) v[i] += o.coeffs_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < o.coeffs_.size()) v[i] -= o.coeffs_[i];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
        if (o.coeffs_[j] == 0) continue;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            v[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& d) const {
    if (d.is_zero()) throw ValidationError("polynomial division by zero");
    if (d.leading() != 1 && d.leading() != -1)
        throw ValidationError("divmod requires a divisor with unit leading coefficient");
    std::vector<BigInt> rem = coeffs_;
    int dd = d.degree();
    int qd = degree() - dd;
    if (qd < 0) return {zero(), *this};
    std::vector<BigInt> quot(static_cast<size_t>(qd) + 1);
    const BigInt& lead = d.leading();
    for (int k = qd; k >= 0; --k) {
        BigInt c = rem[static_cast<size_t>(k + dd)] * lead;  // lead is +-1
        quot[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= c * d.coeffs_[static_cast<size_t>(i)];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        BigInt abs = c < 0 ? BigInt(-c) : c;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (k == 0 || abs != 1) os << abs.str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPoly geometric_series_poly(long long p, int r) {
    if (!is_prime_ll(p)) throw ValidationError("geometric_series_poly: p must be prime");
    if (r < 1) throw ValidationError("geometric_series_poly: r must be >= 1");
    long long q = pow_ll(p, r);
    std::vector<BigInt> v(static_cast<size_t>(q), BigInt(1));
    return IntPoly(std::move(v));
}

IntPoly cyclotomic_poly(long long p, int i) {
    if (!is_prime_ll(p)) throw ValidationError("cyclotomic_poly: p must be prime");
    if (i < 1) throw ValidationError("cyclotomic_poly: index must be >= 1");
    long long step = pow_ll(p, i - 1);
    std::vector<BigInt> v(static_cast<size_t>(step * (p - 1)) + 1);
    for (long long j = 0; j < p; ++j) v[static_cast<size_t>(j * step)] = 1;
    return IntPoly(std::move(v));
}

} // namespace superjac
