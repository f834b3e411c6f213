#include "cypres/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cypres {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t totient(std::uint64_t n) {
    if (n < 1) throw DomainError("totient requires n >= 1");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned padic_valuation(std::uint64_t p, const BigInt& x) {
    if (x == 0) throw DomainError("p-adic valuation of 0 is undefined");
    if (!is_prime(p)) throw DomainError("p-adic valuation requires a prime p");
    BigInt y = abs(x);
    unsigned e = 0;
    while (y % p == 0) {
        y /= p;
        ++e;
    }
    return e;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n < 1) throw DomainError("divisors requires n >= 1");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPoly power_minus_one(std::size_t n) {
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[0] = -1;
    c[n] += 1;
    return IntPoly(std::move(c));
}

namespace {

std::mutex g_cyclo_mutex;
std::map<std::uint64_t, IntPoly> g_cyclo_cache;

}  // namespace

IntPoly cyclotomic(std::uint64_t d) {
    if (d < 1) throw DomainError("cyclotomic requires d >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(d);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    // Recompute outside the lock; the function is pure, so a racing
    // recomputation only costs time.
    IntPoly phi = power_minus_one(d);
    for (std::uint64_t e : divisors(d))
        if (e != d) phi = divexact(phi, cyclotomic(e));
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        g_cyclo_cache.emplace(d, phi);
    }
    return phi;
}

std::vector<std::pair<std::uint64_t, IntPoly>> factor_power_minus_one(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, IntPoly>> factors;
    for (std::uint64_t d : divisors(n)) factors.emplace_back(d, cyclotomic(d));
    return factors;
}

namespace {

// If x = p^j for a prime p and j >= 1, report p.
bool prime_power(std::uint64_t x, std::uint64_t& p) {
    if (x < 2) return false;
    std::uint64_t q = 2;
    while (q * q <= x && x % q != 0) q += (q == 2 ? 1 : 2);
    if (x % q != 0) q = x;  // x itself is prime
    while (x % q == 0) x /= q;
    p = q;
    return x == 1;
}

}  // namespace

BigInt cyclotomic_resultant(std::uint64_t k, std::uint64_t l) {
    if (k < 1 || l < 1) throw DomainError("cyclotomic indices must be >= 1");
    if (k == l) throw DomainError("cyclotomic resultant requires k != l");
    std::uint64_t p = 0;
    if (k % l == 0 && prime_power(k / l, p))
        return pow(BigInt(p), static_cast<unsigned>(totient(l)));
    if (l % k == 0 && prime_power(l / k, p))
        return pow(BigInt(p), static_cast<unsigned>(totient(k)));
    return 1;
}

}  // namespace cypres
