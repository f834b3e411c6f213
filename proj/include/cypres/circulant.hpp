#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cypres/intpoly.hpp"

namespace cypres {

// Row-major rectangular integer matrix.
using Matrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
    // d_1 | d_2 | ... | d_rank, all positive, padded with zeros up to
    // min(rows, cols).
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
};

// Smith normal form by unimodular row/column operations, with min-absolute
// pivoting to curb entry growth. DomainError on a ragged matrix.
SmithForm smith_normal_form(Matrix m);

// Free rank plus invariant torsion factors of a finitely generated abelian
// group, as read off a Smith normal form.
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // each >= 2, each divides the next

    bool operator==(const AbelianGroupStructure&) const = default;
    bool is_free() const noexcept { return torsion.empty(); }
    BigInt torsion_order() const;  // product of the invariant factors
    std::string str() const;       // e.g. "Z^2 + Z/19", "Z/11", "0"
};

/// n x n integer circulant, stored by its first row; row i is the cyclic
/// right-shift of row i-1.
class Circulant {
 public:
    Circulant(std::size_t n, std::vector<BigInt> first_row);

    // First row from the coefficients of f folded mod t^n - 1:
    // row[i] = sum of f's coefficients of t^j over j = i (mod n).
    static Circulant from_poly(const IntPoly& f, std::size_t n);

    std::size_t size() const noexcept { return n_; }
    const std::vector<BigInt>& first_row() const noexcept { return row_; }

    // The first row read as a polynomial (degree < n).
    IntPoly representer() const;
    // The full matrix.
    Matrix expand() const;

    // |det| = |Res(representer, t^n - 1)|; 0 for a zero representer.
    BigInt determinant() const;

    // Structure of Z^n / (row space), from the Smith normal form: the free
    // rank is n - rank and the torsion the diagonal entries above 1.
    AbelianGroupStructure cokernel() const;

 private:
    std::size_t n_;
    std::vector<BigInt> row_;
};

}  // namespace cypres
