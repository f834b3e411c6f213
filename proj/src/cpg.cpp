#include "cypres/cpg.hpp"

#include <cctype>

#include "cypres/cyclo.hpp"

namespace cypres {

FibParams::FibParams(std::size_t n_in, long long m_in, long long k_in) : n(n_in) {
    if (n < 1) throw DomainError("FibParams requires n >= 1");
    const long long nn = static_cast<long long>(n);
    m = static_cast<std::size_t>(((m_in % nn) + nn) % nn);
    k = static_cast<std::size_t>(((k_in % nn) + nn) % nn);
}

CyclicWord parse_cyclic_word(std::string_view text, std::size_t n) {
    if (n < 1) throw DomainError("cyclic word requires n >= 1");
    CyclicWord w;
    std::size_t i = 0;
    const std::size_t len = text.size();
    while (i < len) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != 'x') throw SyntaxError("expected generator 'x<idx>'", i);
        ++i;
        bool negative = false;
        if (i < len && text[i] == '-') {
            negative = true;
            ++i;
        }
        std::size_t digits_start = i;
        long long idx = 0;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            idx = idx * 10 + (text[i] - '0');
            ++i;
        }
        if (i == digits_start) throw SyntaxError("expected generator index", i);
        if (negative) throw IndexError("negative generator index");
        int exponent = 1;
        if (i < len && text[i] == '^') {
            ++i;
            if (text.substr(i, 2) != "-1") throw SyntaxError("expected exponent '^-1'", i);
            i += 2;
            exponent = -1;
        }
        if (i < len && !std::isspace(static_cast<unsigned char>(text[i])))
            throw SyntaxError("unexpected character after atom", i);
        w.letters.emplace_back(idx, exponent);
    }
    if (w.letters.empty()) throw SyntaxError("empty word", 0);
    return w;
}

std::vector<BigInt> exponent_sums(const CyclicWord& w, std::size_t n) {
    if (n < 1) throw DomainError("exponent_sums requires n >= 1");
    std::vector<BigInt> sums(n, BigInt(0));
    const long long nn = static_cast<long long>(n);
    for (const auto& [idx, exp] : w.letters) sums[static_cast<std::size_t>(((idx % nn) + nn) % nn)] += exp;
    return sums;
}

IntPoly representer_poly(const FibParams& p) {
    std::vector<BigInt> c(std::max(p.m, p.k) + 1, BigInt(0));
    c[0] += 1;
    c[p.m] += 1;
    c[p.k] -= 1;
    return IntPoly(std::move(c));
}

AbelianGroupStructure abelianization(const FibParams& p) {
    return Circulant::from_poly(representer_poly(p), p.n).cokernel();
}

std::size_t rank_via_gcd(const FibParams& p) {
    IntPoly g = gcd_primitive(representer_poly(p), power_minus_one(p.n));
    return *g.degree();  // representer is never zero, so the gcd is nonzero
}

BigInt resultant_FG(std::size_t n, std::size_t m) {
    if (n < 1 || n % 6 != 0) throw DomainError("Res(F,G) requires n = 0 (mod 6)");
    if (m % 6 != 2) throw DomainError("Res(F,G) requires m = 2 (mod 6)");
    IntPoly phi6 = cyclotomic(6);
    std::vector<BigInt> fc(m + 1, BigInt(0));
    fc[0] += 1;
    fc[1] -= 1;
    fc[m] += 1;
    IntPoly f_over_phi6 = divexact(IntPoly(std::move(fc)), phi6);
    IntPoly g_over_phi6 = divexact(power_minus_one(n), phi6);
    return resultant(f_over_phi6, g_over_phi6);
}

bool rank2_torsionfree(std::size_t n, std::size_t m) { return resultant_FG(n, m) == 1; }

}  // namespace cypres
