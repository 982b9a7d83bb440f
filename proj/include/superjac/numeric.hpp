#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <utility>

#include "superjac/errors.hpp"

namespace superjac {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

inline bool is_prime_ll(long long n) { return is_prime(BigInt(n)); }

// Floor division (quotient rounded toward -infinity).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& b) {
    return a - floor_div(a, b) * b;
}

/// Greatest integer strictly less than z: floor(z) for non-integral z,
/// z - 1 for integral z.
inline BigInt strict_floor(const Rational& z) {
    const BigInt& num = boost::multiprecision::numerator(z);
    const BigInt& den = boost::multiprecision::denominator(z);
    if (num % den == 0) return num / den - 1;
    return floor_div(num, den);
}

inline long long strict_floor_ll(long long num, long long den) {
    if (num % den == 0) return num / den - 1;
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

/// Pair (a, b) with a*m + b*M = 1 and 0 < a < M (for M > 1).
/// For M = 1 returns (1, 1 - m) so the identity still holds.
std::pair<BigInt, BigInt> bezout_pair(const BigInt& m, const BigInt& M);

// p^e for small exponents, with overflow guard.
long long pow_ll(long long base, int exp);

} // namespace superjac
