#include <doctest.h>

#include <algorithm>

#include "cypres/circulant.hpp"
#include "cypres/cyclo.hpp"
#include "testutil.hpp"

using namespace cypres;
using testutil::rand_int;

namespace {

Matrix make(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (long long x : r) m.back().emplace_back(x);
    }
    return m;
}

Circulant rand_circulant(std::size_t max_n, long long max_entry) {
    const std::size_t n = static_cast<std::size_t>(rand_int(1, static_cast<long long>(max_n)));
    std::vector<BigInt> row(n);
    for (auto& x : row) x = rand_int(-max_entry, max_entry);
    return Circulant(n, std::move(row));
}

// 2x2 integer matrices of determinant +-1 for invariance checks.
Matrix rand_unimodular2() {
    // [[1, a], [0, 1]] * [[1, 0], [b, 1]] with random small a, b, then an
    // optional swap of the rows (determinant -1).
    const BigInt a = rand_int(-3, 3), b = rand_int(-3, 3);
    Matrix u = make({{1, 0}, {0, 1}});
    u[0][0] = 1 + a * b;
    u[0][1] = a;
    u[1][0] = b;
    u[1][1] = 1;
    if (rand_int(0, 1)) std::swap(u[0], u[1]);
    return u;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    const std::size_t r = x.size(), c = y[0].size(), inner = y.size();
    Matrix out(r, std::vector<BigInt>(c, BigInt(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < c; ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
}

}  // namespace

TEST_CASE("circulant_from_poly folds exponents mod n") {
    const IntPoly f1{1, -1, 1};  // 1 - t + t^2
    CHECK(Circulant::from_poly(f1, 6).first_row() ==
          std::vector<BigInt>{1, -1, 1, 0, 0, 0});

    const IntPoly f2{1, -1, 0, 0, 0, 0, 0, 0, 1};  // 1 - t + t^8
    CHECK(Circulant::from_poly(f2, 6).first_row() ==
          std::vector<BigInt>{1, -1, 1, 0, 0, 0});

    CHECK(Circulant::from_poly(IntPoly{}, 3).first_row() == std::vector<BigInt>{0, 0, 0});
    CHECK_THROWS_AS(Circulant::from_poly(IntPoly{1}, 0), DomainError);
}

TEST_CASE("expand produces cyclic right-shifts") {
    const Circulant c(3, {BigInt(1), BigInt(2), BigInt(3)});
    const Matrix m = c.expand();
    CHECK(m == make({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}));
}

TEST_CASE("smith_normal_form basics") {
    SUBCASE("identity") {
        const SmithForm snf = smith_normal_form(make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
        CHECK(snf.diagonal == std::vector<BigInt>{1, 1, 1});
        CHECK(snf.rank == 3);
    }
    SUBCASE("hand-reduced 2x2") {
        const SmithForm snf = smith_normal_form(make({{2, 1}, {1, 2}}));
        CHECK(snf.diagonal == std::vector<BigInt>{1, 3});
        CHECK(snf.rank == 2);
    }
    SUBCASE("zero matrix") {
        const SmithForm snf = smith_normal_form(make({{0, 0}, {0, 0}}));
        CHECK(snf.diagonal == std::vector<BigInt>{0, 0});
        CHECK(snf.rank == 0);
    }
    SUBCASE("rectangular") {
        const SmithForm snf = smith_normal_form(make({{2, 4, 4}, {-6, 6, 12}}));
        CHECK(snf.rank == 2);
        CHECK(snf.diagonal.size() == 2);
        CHECK(snf.diagonal[1] % snf.diagonal[0] == 0);
    }
    SUBCASE("ragged input") {
        CHECK_THROWS_AS(smith_normal_form(make({{1, 2}, {3}})), DomainError);
    }
}

TEST_CASE("abelian structure of named circulants") {
    const Circulant sieradski6(6, {BigInt(1), BigInt(-1), BigInt(1), BigInt(0), BigInt(0), BigInt(0)});
    const AbelianGroupStructure free2 = sieradski6.cokernel();
    CHECK(free2.free_rank == 2);
    CHECK(free2.torsion.empty());
    CHECK(free2.str() == "Z^2");

    // representer of H(12,8): 1 + t^8 - t
    std::vector<BigInt> row12(12, BigInt(0));
    row12[0] = 1;
    row12[8] = 1;
    row12[1] = -1;
    const AbelianGroupStructure h128 = Circulant(12, row12).cokernel();
    CHECK(h128.free_rank == 2);
    CHECK(h128.torsion == std::vector<BigInt>{5});
    CHECK(h128.str() == "Z^2 + Z/5");

    const Circulant trivial(1, {BigInt(1)});
    CHECK(trivial.cokernel().free_rank == 0);
    CHECK(trivial.cokernel().torsion.empty());
    CHECK(trivial.cokernel().str() == "0");
}

TEST_CASE("determinant via resultant") {
    CHECK(Circulant(3, {BigInt(1), BigInt(1), BigInt(0)}).determinant() == 2);
    CHECK(Circulant(6, {BigInt(1), BigInt(-1), BigInt(1), BigInt(0), BigInt(0), BigInt(0)})
              .determinant() == 0);
    CHECK(Circulant(5, {BigInt(1), BigInt(1), BigInt(0), BigInt(0), BigInt(0)}).determinant() == 2);
    CHECK(Circulant(2, {BigInt(0), BigInt(0)}).determinant() == 0);
    CHECK(Circulant(3, {BigInt(4), BigInt(0), BigInt(0)}).determinant() == 64);
}

TEST_CASE("property: determinant = product of SNF diagonal; singular iff rank deficient") {
    for (int iter = 0; iter < 120; ++iter) {
        const Circulant c = rand_circulant(12, 3);
        CAPTURE(c.size());
        CAPTURE(c.representer().str());
        const SmithForm snf = smith_normal_form(c.expand());
        const BigInt det = c.determinant();
        if (snf.rank == c.size()) {
            BigInt prod = 1;
            for (const BigInt& d : snf.diagonal) prod *= d;
            CHECK(det == prod);
            CHECK(det != 0);
        } else {
            CHECK(det == 0);
        }
    }
}

TEST_CASE("property: determinant = product of resultants against cyclotomic factors") {
    for (int iter = 0; iter < 120; ++iter) {
        const Circulant c = rand_circulant(12, 3);
        const IntPoly f = c.representer();
        if (f.is_zero()) continue;
        CAPTURE(c.size());
        CAPTURE(f.str());
        BigInt prod = 1;
        for (std::uint64_t d : divisors(c.size())) prod *= resultant(f, cyclotomic(d));
        CHECK(c.determinant() == prod);
    }
}

TEST_CASE("property: free rank equals gcd degree with t^n - 1") {
    for (int iter = 0; iter < 120; ++iter) {
        const Circulant c = rand_circulant(12, 3);
        const IntPoly f = c.representer();
        if (f.is_zero()) continue;
        CAPTURE(c.size());
        CAPTURE(f.str());
        const std::size_t gcd_deg = *gcd_primitive(f, power_minus_one(c.size())).degree();
        CHECK(c.cokernel().free_rank == gcd_deg);
    }
}

TEST_CASE("property: SNF invariant under unimodular multiplication") {
    for (int iter = 0; iter < 200; ++iter) {
        Matrix m(2, std::vector<BigInt>(2));
        for (auto& row : m)
            for (auto& x : row) x = rand_int(-6, 6);
        const SmithForm before = smith_normal_form(m);
        const SmithForm after = smith_normal_form(mat_mul(rand_unimodular2(), mat_mul(m, rand_unimodular2())));
        CHECK(before.diagonal == after.diagonal);
        CHECK(before.rank == after.rank);
    }
}
