#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace greenring {

// Exact coefficient types. Ring coefficients and lattice entries use Int;
// cyclotomic coordinates use Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division/remainder (operator/ on cpp_int truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long mod_reduce(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline long long lcm_ll(long long a, long long b) {
    return a / gcd_ll(a, b) * b;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace greenring
