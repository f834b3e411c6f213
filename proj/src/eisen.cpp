#include "cypres/eisen.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <utility>

namespace cypres {

EisInt EisInt::eta_pow(long long k) {
    switch (((k % 6) + 6) % 6) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 1};  // eta - 1
        case 3: return {-1, 0};
        case 4: return {0, -1};
        default: return {1, -1};  // 1 - eta
    }
}

BigInt lucas(unsigned k) {
    BigInt prev = 2, cur = 1;
    if (k == 0) return prev;
    for (unsigned i = 1; i < k; ++i) {
        prev += cur;
        std::swap(prev, cur);
    }
    return cur;
}

GrowParams::GrowParams(unsigned s_in, unsigned b_in) : s(s_in), b(b_in) {
    if (s < 2) throw DomainError("GrowParams requires s >= 2");
    if (b != 1 && b != 2) throw DomainError("GrowParams requires b in {1, 2}");
    if (s > 38) throw DomainError("GrowParams: 3^s exceeds the supported range");
}

std::uint64_t GrowParams::q() const {
    std::uint64_t v = 1;
    for (unsigned i = 1; i < s; ++i) v *= 3;
    return v;
}

std::uint64_t GrowParams::n() const { return 2 * 3 * q(); }

std::uint64_t GrowParams::m() const { return 2 + (std::uint64_t{1} << b) * q(); }

EisInt power_sum(const GrowParams& g) {
    const EisInt e = EisInt::eta_pow(-static_cast<long long>(g.epsilon()));
    EisInt prev{2, 0};
    EisInt cur = e;
    for (std::uint64_t k = 1; k < g.q(); ++k) {
        EisInt next = e * (cur - prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt rq_norm(const GrowParams& g) {
    const EisInt eta = EisInt::eta_pow(1);
    EisInt r = EisInt{1, 0} - eta * power_sum(g) + EisInt::eta_pow(2);
    return r.norm();
}

bool beta_modulus_check(const GrowParams& g) {
    using cd = std::complex<double>;
    const double pi = 3.14159265358979323846;
    const cd eta = std::polar(1.0, pi / 3.0);
    cd c = 1;
    for (unsigned i = 0; i < g.epsilon(); ++i) c *= eta;
    // Roots of c X^2 - X + 1.
    const cd disc = std::sqrt(cd(1.0) - 4.0 * c);
    const cd r1 = (cd(1.0) + disc) / (2.0 * c);
    const cd r2 = (cd(1.0) - disc) / (2.0 * c);
    const double m1 = std::abs(r1), m2 = std::abs(r2);
    if (std::abs(m1 - m2) < 1e-9)
        throw NumericInstability("root moduli are numerically indistinguishable");
    const double larger = std::max(m1, m2);
    return larger - std::cbrt(3.0) > 10.0 * std::numeric_limits<double>::epsilon();
}

}  // namespace cypres
