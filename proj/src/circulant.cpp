#include "cypres/circulant.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cypres/cyclo.hpp"

namespace cypres {

namespace {

void check_matrix_limit(const Matrix& m) {
    const unsigned long limit = coeff_bit_limit();
    if (limit == 0) return;
    for (const auto& row : m)
        for (const BigInt& x : row)
            if (bit_length(x) > limit)
                throw LimitExceeded("matrix entry exceeds CYPRES_MAX_BITS (" +
                                    std::to_string(limit) + " bits)");
}

}  // namespace

SmithForm smith_normal_form(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != cols) throw DomainError("smith_normal_form requires a rectangular matrix");

    SmithForm out;
    const std::size_t dim = std::min(rows, cols);
    out.diagonal.assign(dim, BigInt(0));

    std::size_t s = 0;
    while (s < dim) {
        // Min-absolute nonzero pivot in the trailing submatrix.
        std::size_t pi = rows, pj = cols;
        BigInt best;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j)
                if (m[i][j] != 0) {
                    BigInt a = abs(m[i][j]);
                    if (pi == rows || a < best) {
                        best = std::move(a);
                        pi = i;
                        pj = j;
                    }
                }
        if (pi == rows) break;  // trailing submatrix is zero
        std::swap(m[s], m[pi]);
        if (pj != s)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][s], m[i][pj]);

        // Reduce column s, then row s. Any nonzero remainder becomes a
        // smaller pivot candidate, so restart the pivot search.
        bool again = false;
        for (std::size_t i = s + 1; i < rows; ++i) {
            if (m[i][s] == 0) continue;
            BigInt q = m[i][s] / m[s][s];
            if (q != 0)
                for (std::size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
            if (m[i][s] != 0) again = true;
        }
        if (again) continue;
        for (std::size_t j = s + 1; j < cols; ++j) {
            if (m[s][j] == 0) continue;
            BigInt q = m[s][j] / m[s][s];
            if (q != 0)
                for (std::size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
            if (m[s][j] != 0) again = true;
        }
        if (again) continue;

        // Pivot must divide the whole trailing submatrix; folding an
        // offending row into row s repairs this.
        bool fixed = false;
        for (std::size_t i = s + 1; i < rows && !fixed; ++i)
            for (std::size_t j = s + 1; j < cols && !fixed; ++j)
                if (m[i][j] % m[s][s] != 0) {
                    for (std::size_t jj = s; jj < cols; ++jj) m[s][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;

        if (m[s][s] < 0) m[s][s] = -m[s][s];
        out.diagonal[s] = m[s][s];
        ++s;
        check_matrix_limit(m);
    }
    out.rank = s;
    return out;
}

BigInt AbelianGroupStructure::torsion_order() const {
    BigInt prod = 1;
    for (const BigInt& d : torsion) prod *= d;
    return prod;
}

std::string AbelianGroupStructure::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const BigInt& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    if (first) os << "0";
    return os.str();
}

Circulant::Circulant(std::size_t n, std::vector<BigInt> first_row)
    : n_(n), row_(std::move(first_row)) {
    if (n_ < 1) throw DomainError("circulant size must be >= 1");
    if (row_.size() != n_) throw DomainError("circulant first row must have length n");
}

Circulant Circulant::from_poly(const IntPoly& f, std::size_t n) {
    if (n < 1) throw DomainError("circulant size must be >= 1");
    std::vector<BigInt> row(n, BigInt(0));
    const auto& c = f.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) row[j % n] += c[j];
    return Circulant(n, std::move(row));
}

IntPoly Circulant::representer() const { return IntPoly(row_); }

Matrix Circulant::expand() const {
    Matrix m(n_, std::vector<BigInt>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m[i][j] = row_[(j + n_ - i) % n_];
    return m;
}

BigInt Circulant::determinant() const {
    IntPoly f = representer();
    if (f.is_zero()) return 0;
    return resultant(f, power_minus_one(n_));
}

AbelianGroupStructure Circulant::cokernel() const {
    SmithForm snf = smith_normal_form(expand());
    AbelianGroupStructure ab;
    ab.free_rank = n_ - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.diagonal[i] > 1) ab.torsion.push_back(snf.diagonal[i]);
    return ab;
}

}  // namespace cypres
