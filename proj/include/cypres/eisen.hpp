#pragma once

#include <cstdint>

#include "cypres/bigint.hpp"
#include "cypres/errors.hpp"

namespace cypres {

/// x + y*eta where eta is a primitive sixth root of unity, eta^2 = eta - 1.
/// The norm x^2 + xy + y^2 is the complex squared modulus, so it is
/// nonnegative and multiplicative.
struct EisInt {
    BigInt x;
    BigInt y;

    EisInt() : x(0), y(0) {}
    EisInt(BigInt x_in, BigInt y_in) : x(std::move(x_in)), y(std::move(y_in)) {}

    // eta^k for any k, using the order-6 unit group.
    static EisInt eta_pow(long long k);

    BigInt norm() const { return x * x + x * y + y * y; }

    friend EisInt operator+(const EisInt& a, const EisInt& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend EisInt operator-(const EisInt& a, const EisInt& b) {
        return {a.x - b.x, a.y - b.y};
    }
    // (x1 + y1 e)(x2 + y2 e) with e^2 = e - 1.
    friend EisInt operator*(const EisInt& a, const EisInt& b) {
        return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
    }
    bool operator==(const EisInt&) const = default;
};

// Lucas numbers L_0 = 2, L_1 = 1, L_{k+1} = L_k + L_{k-1}.
BigInt lucas(unsigned k);

/// Parameters of the family n = 2*3^s, m = 2 + 2^b*3^(s-1): the torsion
/// growth analysis works in Z[eta] with q = 3^(s-1) and eta^eps = zeta^(m-2)
/// for a primitive n-th root zeta, where eps = 2 when m-2 = n/3 (b = 1) and
/// eps = 4 when m-2 = 2n/3 (b = 2).
struct GrowParams {
    unsigned s;  // >= 2
    unsigned b;  // 1 or 2

    GrowParams(unsigned s_in, unsigned b_in);

    std::uint64_t q() const;        // 3^(s-1)
    std::uint64_t n() const;        // 2*3^s
    std::uint64_t m() const;        // 2 + 2^b*3^(s-1)
    unsigned epsilon() const { return 2 * b; }
};

// S_q = beta_1^q + beta_2^q for the roots beta_i of eta^eps X^2 - X + 1,
// by the power-sum recurrence S_0 = 2, S_1 = e, S_{k+1} = e(S_k - S_{k-1})
// with e = eta^(-eps); both the sum and the product of the roots equal e.
EisInt power_sum(const GrowParams& g);

// |R_q|^2 with R_q = 1 - eta*S_q + eta^2. Equals |Res(t^m - t + 1, Phi_n)|,
// which the verifier cross-checks against the subresultant route.
BigInt rq_norm(const GrowParams& g);

// Floating-point sanity check on the roots of eta^eps X^2 - X + 1: the
// larger modulus exceeds 3^(1/3) with real margin, and the two moduli
// multiply to 1. Quarantined: never feeds an exact result.
bool beta_modulus_check(const GrowParams& g);

}  // namespace cypres
