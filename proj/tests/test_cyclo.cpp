#include <doctest.h>

#include <numeric>

#include "cypres/cyclo.hpp"

using namespace cypres;

namespace {

// Enumeration oracle for the totient.
std::uint64_t totient_brute(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(6) == 2);
    CHECK(totient(18) == 6);
    CHECK_THROWS_AS(totient(0), DomainError);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(totient(n) == totient_brute(n));
}

TEST_CASE("padic_valuation") {
    CHECK(padic_valuation(2, 48) == 4);
    CHECK(padic_valuation(3, 18) == 2);
    CHECK(padic_valuation(5, 18) == 0);
    CHECK(padic_valuation(3, -27) == 3);
    CHECK_THROWS_AS(padic_valuation(2, 0), DomainError);
    CHECK_THROWS_AS(padic_valuation(4, 12), DomainError);
    CHECK_THROWS_AS(padic_valuation(1, 12), DomainError);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(18) == std::vector<std::uint64_t>{1, 2, 3, 6, 9, 18});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
    CHECK_THROWS_AS(divisors(0), DomainError);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic(0), DomainError);

    // monic of degree totient(d)
    for (std::uint64_t d = 1; d <= 200; ++d) {
        const IntPoly phi = cyclotomic(d);
        CHECK(*phi.degree() == totient(d));
        CHECK(phi.leading() == 1);
    }
}

TEST_CASE("factorization of t^n - 1") {
    auto f1 = factor_power_minus_one(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == 1);
    CHECK(f1[0].second == IntPoly{-1, 1});

    auto f6 = factor_power_minus_one(6);
    REQUIRE(f6.size() == 4);
    CHECK(f6[2].first == 3);
    CHECK(f6[2].second == IntPoly{1, 1, 1});
    CHECK(f6[3].second == IntPoly{1, -1, 1});

    auto f18 = factor_power_minus_one(18);
    CHECK(f18.size() == 6);
    std::size_t degree_sum = 0;
    for (const auto& [d, phi] : f18) degree_sum += *phi.degree();
    CHECK(degree_sum == 18);

    for (std::uint64_t n = 1; n <= 200; ++n) {
        IntPoly prod{1};
        for (const auto& [d, phi] : factor_power_minus_one(n)) prod = prod * phi;
        CHECK(prod == power_minus_one(n));
    }
}

TEST_CASE("cyclotomic resultant closed form") {
    CHECK(cyclotomic_resultant(6, 2) == 3);
    CHECK(cyclotomic_resultant(6, 3) == 4);
    CHECK(cyclotomic_resultant(5, 7) == 1);
    CHECK(cyclotomic_resultant(2, 6) == 3);
    CHECK_THROWS_AS(cyclotomic_resultant(6, 6), DomainError);
    CHECK_THROWS_AS(cyclotomic_resultant(0, 6), DomainError);

    // closed form vs both computed routes on the full grid
    for (std::uint64_t k = 1; k <= 60; ++k)
        for (std::uint64_t l = k + 1; l <= 60; ++l) {
            CAPTURE(k);
            CAPTURE(l);
            const BigInt closed = cyclotomic_resultant(k, l);
            CHECK(closed == resultant(cyclotomic(k), cyclotomic(l)));
        }
    CHECK(cyclotomic_resultant(6, 3) == resultant_sylvester(cyclotomic(6), cyclotomic(3)));
}

TEST_CASE("Phi_d(1) detects prime powers") {
    for (std::uint64_t d = 2; d <= 100; ++d) {
        const BigInt value = cyclotomic(d)(1);
        std::uint64_t p = 0;
        std::uint64_t rest = d;
        unsigned distinct = 0;
        for (std::uint64_t f = 2; f * f <= rest; ++f)
            if (rest % f == 0) {
                ++distinct;
                p = f;
                while (rest % f == 0) rest /= f;
            }
        if (rest > 1) {
            ++distinct;
            if (p == 0) p = rest;
        }
        CAPTURE(d);
        if (distinct == 1)
            CHECK(value == p);
        else
            CHECK(value == 1);
    }
}

TEST_CASE("is_prime trial division") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(7919));
}
