#pragma once

#include <random>

#include "cypres/intpoly.hpp"

namespace cypres::testutil {

// Deterministic generator so failures are reproducible from the seed alone.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline long long rand_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

// Random polynomial with degree <= max_deg and |coefficients| <= max_coeff;
// may be zero unless nonzero is set.
inline IntPoly rand_poly(std::size_t max_deg, long long max_coeff, bool nonzero = false) {
    for (;;) {
        const std::size_t deg = static_cast<std::size_t>(rand_int(0, static_cast<long long>(max_deg)));
        std::vector<BigInt> c(deg + 1);
        for (auto& x : c) x = rand_int(-max_coeff, max_coeff);
        IntPoly p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

// Random polynomial with leading coefficient +-1 and exact degree in
// [1, max_deg]. The shift law Res(A+BC, B) = Res(A, B) needs a unit leading
// coefficient on B (otherwise lc(B)^(deg(A+BC)-deg A) creeps in); every B it
// is applied to in this domain is a monic t^k +- 1.
inline IntPoly rand_poly_unit_lc(std::size_t max_deg, long long max_coeff) {
    const std::size_t deg = static_cast<std::size_t>(rand_int(1, static_cast<long long>(max_deg)));
    std::vector<BigInt> c(deg + 1);
    for (auto& x : c) x = rand_int(-max_coeff, max_coeff);
    c[deg] = rand_int(0, 1) ? 1 : -1;
    return IntPoly(std::move(c));
}

}  // namespace cypres::testutil
