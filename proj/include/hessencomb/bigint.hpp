#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hessencomb {

// Exact arithmetic everywhere: desk-scale inputs (n <= 9) keep magnitudes
// modest, but nothing in the library may overflow by construction.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace hessencomb
