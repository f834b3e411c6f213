#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cypres/bigint.hpp"
#include "cypres/errors.hpp"

namespace cypres {

// Safety valve on coefficient size: once set to a nonzero bit count, any
// polynomial coefficient exceeding it raises LimitExceeded. 0 disables.
void set_coeff_bit_limit(unsigned long bits);
unsigned long coeff_bit_limit();

/// Dense univariate polynomial over Z.
///
/// coeff(i) is the coefficient of t^i. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing, and its degree is
/// the empty optional rather than any integer.
class IntPoly {
 public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(BigInt c);
    // c * t^k
    static IntPoly monomial(std::size_t k, BigInt c = 1);

    bool is_zero() const noexcept { return c_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    // Zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const noexcept;
    // Leading coefficient; throws ZeroPolynomial on the zero polynomial.
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    // Exact evaluation at an integer (Horner).
    BigInt operator()(const BigInt& x) const;

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    // this / content, scaled to a positive leading coefficient.
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const BigInt& c);
    bool operator==(const IntPoly&) const = default;

    // Ascending coefficients, space separated; "0" for the zero polynomial.
    std::string str() const;

 private:
    std::vector<BigInt> c_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

// Exact quotient p / d in Z[t]; NotDivisible if d does not divide p,
// ZeroPolynomial if d is zero.
IntPoly divexact(const IntPoly& p, const IntPoly& d);

// Primitive positive-leading gcd over Q scaled into Z[t] (primitive PRS).
// Requires at least one nonzero argument.
IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q);

// |Res(p, q)| by the subresultant PRS; 0 exactly when p and q share a root.
// Throws ZeroPolynomial if either argument is zero.
BigInt resultant(const IntPoly& p, const IntPoly& q);

// |Res(p, q)| as the Sylvester determinant via fraction-free (Bareiss)
// elimination. Independent of the subresultant path by construction.
BigInt resultant_sylvester(const IntPoly& p, const IntPoly& q);

}  // namespace cypres
