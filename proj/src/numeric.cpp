#include "superjac/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace superjac {

std::pair<BigInt, BigInt> bezout_pair(const BigInt& m, const BigInt& M) {
    if (m < 1 || M < 1) throw ValidationError("bezout_pair: arguments must be positive");
    if (boost::multiprecision::gcd(m, M) != 1)
        throw ValidationError("bezout_pair: arguments are not coprime");
    if (M == 1) return {BigInt(1), BigInt(1) - m};

    // extended Euclid on (m, M)
    BigInt r0 = m, r1 = M, a0 = 1, a1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt a2 = a0 - q * a1;
        r0 = r1; r1 = r2;
        a0 = a1; a1 = a2;
    }
    // a0 * m = 1 mod M; normalize to 0 < a < M
    BigInt a = mod_floor(a0, M);
    if (a == 0) a = M;  // cannot happen for coprime inputs, kept as guard
    BigInt b = (BigInt(1) - a * m) / M;
    return {a, b};
}

long long pow_ll(long long base, int exp) {
    BigInt v = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
    if (v > BigInt(std::numeric_limits<long long>::max()))
        throw ValidationError("parameter power overflows the supported range");
    return static_cast<long long>(v);
}

} // namespace superjac
