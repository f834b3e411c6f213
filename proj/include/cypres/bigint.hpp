#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cypres {

// Arbitrary-precision signed integer used for every exact value in the library.
using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;

// Number of bits in |x| (0 for x = 0).
inline unsigned long bit_length(const BigInt& x) {
    if (x == 0) return 0;
    return boost::multiprecision::msb(abs(x)) + 1;
}

}  // namespace cypres
