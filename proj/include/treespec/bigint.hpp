#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace treespec {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_even(const BigInt& x) { return x % 2 == 0; }

// Nonnegative remainder of x mod m (m > 0), regardless of the sign of x.
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

// Largest t with 2^t dividing x (x != 0).
inline int twos_valuation(BigInt x) {
    if (x == 0) return 0;
    if (x < 0) x = -x;
    int t = 0;
    while (is_even(x)) {
        x >>= 1;
        ++t;
    }
    return t;
}

}  // namespace treespec
