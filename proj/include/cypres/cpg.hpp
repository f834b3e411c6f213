#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "cypres/circulant.hpp"
#include "cypres/intpoly.hpp"

namespace cypres {

/// Parameters of the Fibonacci-type cyclically presented group
///   G_n(m, k) = < x_0, ..., x_{n-1} | x_i x_{i+m} = x_{i+k} >,
/// indices mod n. The Gilbert-Howie group H(n, m) is the k = 1 case.
/// m and k are normalized into [0, n) at construction.
struct FibParams {
    std::size_t n;
    std::size_t m;
    std::size_t k;

    FibParams(std::size_t n, long long m, long long k = 1);
};

// A word in the free group on x_0..x_{n-1}: (generator index, exponent +-1).
// Indices are reduced mod n only when exponent sums are taken.
struct CyclicWord {
    std::vector<std::pair<long long, int>> letters;
};

// Grammar: whitespace-separated atoms `x<idx>` or `x<idx>^-1`, idx decimal.
// SyntaxError (with byte offset) on a malformed atom, IndexError on idx < 0.
CyclicWord parse_cyclic_word(std::string_view text, std::size_t n);

// c_i = sum of exponents of the letters with index = i (mod n).
std::vector<BigInt> exponent_sums(const CyclicWord& w, std::size_t n);

// 1 + t^m - t^k, unreduced; collapses to 1 when m = k.
IntPoly representer_poly(const FibParams& p);

// Structure of G_n(m,k)^ab via the Smith normal form of the circulant
// relation matrix. Ground truth for everything the verifiers claim.
AbelianGroupStructure abelianization(const FibParams& p);

// deg gcd(1 + t^m - t^k, t^n - 1): the Z-rank of the abelianization.
std::size_t rank_via_gcd(const FibParams& p);

// |Res(F, G)| with F = (t^m - t + 1)/Phi_6 and G = (t^n - 1)/Phi_6.
// Requires 6 | n and m = 2 (mod 6) so that Phi_6 divides both; DomainError
// otherwise.
BigInt resultant_FG(std::size_t n, std::size_t m);

// H(n,m)^ab is torsion-free of rank 2 exactly when Res(F, G) = 1.
bool rank2_torsionfree(std::size_t n, std::size_t m);

}  // namespace cypres
