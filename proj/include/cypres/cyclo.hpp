#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cypres/intpoly.hpp"

namespace cypres {

// Deterministic trial division; inputs are desk scale by design.
bool is_prime(std::uint64_t n);

// Euler's totient. DomainError if n < 1.
std::uint64_t totient(std::uint64_t n);

// Largest e with p^e | x. DomainError if x = 0 or p is not prime.
unsigned padic_valuation(std::uint64_t p, const BigInt& x);

// All divisors of n, ascending. DomainError if n < 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// t^n - 1.
IntPoly power_minus_one(std::size_t n);

// The d-th cyclotomic polynomial, built by exact division of t^d - 1 by the
// cyclotomic polynomials of the proper divisors of d. Memoized per process.
IntPoly cyclotomic(std::uint64_t d);

// (d, Phi_d) for every d | n, ascending; the product is t^n - 1.
std::vector<std::pair<std::uint64_t, IntPoly>> factor_power_minus_one(std::uint64_t n);

// |Res(Phi_k, Phi_l)| by the closed form: p^totient(l) when k = l p^j for a
// prime p (symmetrically for l = k p^j), else 1. No polynomial arithmetic.
// DomainError if k = l.
BigInt cyclotomic_resultant(std::uint64_t k, std::uint64_t l);

}  // namespace cypres
