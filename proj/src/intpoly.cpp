#include "cypres/intpoly.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <utility>

namespace cypres {

namespace {

std::atomic<unsigned long> g_bit_limit{0};

void check_limit(const std::vector<BigInt>& coeffs) {
    const unsigned long limit = g_bit_limit.load(std::memory_order_relaxed);
    if (limit == 0) return;
    for (const BigInt& c : coeffs) {
        if (bit_length(c) > limit)
            throw LimitExceeded("coefficient exceeds CYPRES_MAX_BITS (" +
                                std::to_string(limit) + " bits)");
    }
}

const BigInt k_zero{0};

}  // namespace

void set_coeff_bit_limit(unsigned long bits) {
    g_bit_limit.store(bits, std::memory_order_relaxed);
}

unsigned long coeff_bit_limit() {
    return g_bit_limit.load(std::memory_order_relaxed);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    p.normalize();
    return p;
}

IntPoly IntPoly::monomial(std::size_t k, BigInt c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, BigInt(0));
        p.c_[k] = std::move(c);
    }
    p.normalize();
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    check_limit(c_);
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const BigInt& IntPoly::coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : k_zero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const BigInt& c : c_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const BigInt& c : c_) r.c_.push_back(c / g);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    r.c_.reserve(c_.size());
    for (const BigInt& c : c_) r.c_.push_back(-c);
    return r;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p.coeff(i) + q.coeff(i);
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p.coeff(i) - q.coeff(i);
    r.normalize();
    return r;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    IntPoly r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) r.c_[i + j] += p.c_[i] * q.c_[j];
    }
    r.normalize();
    return r;
}

IntPoly operator*(const IntPoly& p, const BigInt& c) {
    if (c == 0) return {};
    IntPoly r;
    r.c_.reserve(p.c_.size());
    for (const BigInt& a : p.c_) r.c_.push_back(a * c);
    r.normalize();
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

IntPoly divexact(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    if (p.is_zero()) return {};
    const std::size_t dp = *p.degree(), dd = *d.degree();
    if (dp < dd) throw NotDivisible("degree of divisor exceeds degree of dividend");

    std::vector<BigInt> rem(p.coeffs());
    std::vector<BigInt> quo(dp - dd + 1, BigInt(0));
    const BigInt& lead = d.leading();
    for (std::size_t i = dp + 1; i-- > dd;) {
        if (rem[i] == 0) continue;
        if (rem[i] % lead != 0) throw NotDivisible("non-integer quotient coefficient");
        BigInt q = rem[i] / lead;
        const std::size_t shift = i - dd;
        for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= q * d.coeff(j);
        quo[shift] = std::move(q);
    }
    for (const BigInt& c : rem)
        if (c != 0) throw NotDivisible("nonzero remainder");
    return IntPoly(std::move(quo));
}

namespace {

// lc(d)^(deg a - deg d + 1) * a  mod  d. Requires deg a >= deg d, d nonzero.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& d) {
    const BigInt& lead = d.leading();
    long long e = static_cast<long long>(*a.degree()) - static_cast<long long>(*d.degree()) + 1;
    IntPoly r = a;
    while (!r.is_zero() && *r.degree() >= *d.degree()) {
        IntPoly s = IntPoly::monomial(*r.degree() - *d.degree(), r.leading());
        r = r * lead - s * d;
        --e;
    }
    // Pad to the full power of lc(d) so the subresultant bookkeeping is exact.
    for (; e > 0; --e) r = r * lead;
    return r;
}

BigInt pow_big(const BigInt& b, std::size_t e) { return pow(b, static_cast<unsigned>(e)); }

BigInt divexact_int(const BigInt& num, const BigInt& den) {
    if (num % den != 0)
        throw Error("internal: inexact integer division in a fraction-free step");
    return num / den;
}

}  // namespace

IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw ZeroPolynomial("gcd of two zero polynomials");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();

    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (*a.degree() < *b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly{} : r.primitive_part();
    }
    return a;
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw ZeroPolynomial("resultant of a zero polynomial");
    const std::size_t dp = *p.degree(), dq = *q.degree();
    if (dp == 0 && dq == 0) return 1;
    if (dp == 0) return abs(pow_big(p.coeff(0), dq));
    if (dq == 0) return abs(pow_big(q.coeff(0), dp));

    // Subresultant PRS (fraction-free); intermediate divisions are exact.
    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    BigInt scale = pow_big(p.content(), dq) * pow_big(q.content(), dp);
    if (*a.degree() < *b.degree()) std::swap(a, b);
    BigInt g = 1, h = 1;
    while (*b.degree() > 0) {
        const std::size_t d = *a.degree() - *b.degree();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return 0;  // nonconstant common factor
        a = std::move(b);
        BigInt den = g * pow_big(h, d);
        std::vector<BigInt> bc;
        bc.reserve(r.coeffs().size());
        for (const BigInt& c : r.coeffs()) bc.push_back(divexact_int(c, den));
        b = IntPoly(std::move(bc));
        g = a.leading();
        if (d > 0) h = divexact_int(pow_big(g, d), pow_big(h, d - 1));
    }
    h = divexact_int(pow_big(b.coeff(0), *a.degree()), pow_big(h, *a.degree() - 1));
    return abs(scale * h);
}

BigInt resultant_sylvester(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw ZeroPolynomial("resultant of a zero polynomial");
    const std::size_t dp = *p.degree(), dq = *q.degree();
    const std::size_t n = dp + dq;
    if (n == 0) return 1;

    // Sylvester matrix: dq shifted copies of p's coefficients (descending),
    // then dp shifted copies of q's.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j <= dp; ++j) m[i][i + j] = p.coeff(dp - j);
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j <= dq; ++j) m[dq + i][i + j] = q.coeff(dq - j);

    // Bareiss fraction-free elimination.
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);  // sign irrelevant, absolute value is taken
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact_int(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return abs(m[n - 1][n - 1]);
}

}  // namespace cypres
