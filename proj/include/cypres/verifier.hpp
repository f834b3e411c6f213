#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cypres/circulant.hpp"
#include "cypres/cpg.hpp"

namespace cypres {

/// Valuation decomposition of a pair (n, m) with 6 | n, m = 2 (mod 6) and
/// 2 < m < n:  n = 2^a 3^s v,  m - 2 = 2^b 3^r u,  gcd(uv, 6) = 1.
struct ParamDecomposition {
    std::size_t n = 0;
    std::size_t m = 0;
    unsigned a = 0, s = 0;
    std::size_t v = 0;
    unsigned b = 0, r = 0;
    std::size_t u = 0;
    std::optional<std::size_t> tau;  // u / v when v | u
    std::size_t K = 0;               // gcd(m - 2, n)
};

// DomainError (naming the violated condition) when the preconditions fail.
ParamDecomposition decompose_params(std::size_t n, std::size_t m);

/// Machine-checkable record of one verifier run: which hypotheses hold,
/// whether the instance is in scope, whether every in-scope conclusion
/// checked out, and the integers that witnessed it.
struct LemmaReport {
    std::string lemma_id;
    std::size_t n = 0;
    std::size_t m = 0;
    bool applicable = false;
    std::vector<std::pair<std::string, bool>> hypotheses;
    bool conclusion_checked = false;
    std::vector<std::pair<std::string, BigInt>> witnesses;

    // An inapplicable instance never counts as a failure.
    bool passed() const noexcept { return !applicable || conclusion_checked; }

    void hypothesis(std::string name, bool holds) {
        hypotheses.emplace_back(std::move(name), holds);
    }
    void witness(std::string name, BigInt value) {
        witnesses.emplace_back(std::move(name), std::move(value));
    }
};

// Applicable when a > b and m = K+2 (mod 2K): checks (2 + L_K) | Res(f, G),
// that Res(Phi_6, G) = n^2/3, and, when Res(F, G) = 1, that (2 + L_K) | n^2/3.
LemmaReport verify_lucas(std::size_t n, std::size_t m);

// The m = 2 + n/2 family: checks Res(F, G) != 1 for n >= 22, and records
// the inequality 2 + L_{n/2} > n^2/3 that forces it.
LemmaReport verify_half(std::size_t n);

// Applicable when v does not divide u: checks Res(F, G) != 1; when v | m-1
// also replays the witness Res(F, t^v + 1) = (2^v + 1)/3.
LemmaReport verify_vg1(std::size_t n, std::size_t m);

// The n = 2*3^s, m - 2 in {n/3, 2n/3} family: computes Res(f, Phi_n) by the
// subresultant route and by the Z[eta] norm route, checks the two agree and
// equal 9 exactly when s = 2; for s = 2 also replays the factorization
// Res(F, G) = Res(f, Phi_{3^s}) * Res(f, Phi_n) / 9.
LemmaReport verify_grow(unsigned s, unsigned b);

struct Reduction {
    std::size_t n1 = 0;
    std::size_t m1 = 0;
    bool operator==(const Reduction&) const = default;
};

// When a >= b+2, s >= r+2, or (a = b+1 and s = r+1), produces a strictly
// smaller congruent pair: n1 | n, n1 < n, 6 | n1, m1 = m (mod n1),
// m1 = 2 (mod 6), 2 < m1 < n1. Empty when none of the three cases applies.
// Requires tau (v | u); DomainError otherwise.
std::optional<Reduction> minimality_reduce(std::size_t n, std::size_t m);

// Report wrapper around minimality_reduce: applicable when a reduction
// exists, and the conclusion checks all six guarantees on (n1, m1).
LemmaReport verify_minimality(std::size_t n, std::size_t m);

enum class CaseLabel { case1, case2, case3, case4, reducible, divides };
const char* to_string(CaseLabel label);

// Exhaustive label for (n, m): `divides` when n | m-2; `reducible` when
// v > 1 or when the minimality reduction applies; otherwise one of the four
// terminal patterns, whose closed forms are m = 2 + n/2 (case1),
// m = 2 + n/3 (case2), m = 2 + 2n/3 (case4); case3 is unreachable for m < n.
CaseLabel classify_case(std::size_t n, std::size_t m);

// Report wrapper around classify_case: records the label (witness "case":
// 1-4, 0 = reducible, -1 = divides) and checks that case3 never occurs and
// that each terminal case satisfies its closed form for m.
LemmaReport verify_cases(std::size_t n, std::size_t m);

struct SweepRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 1;
    AbelianGroupStructure ab;

    bool operator==(const SweepRow&) const = default;
};

// Abelianization of H(n, m) for every 1 <= n <= max_n, 0 <= m < n; returns
// the rows with free rank 2 in (n, m)-lexicographic order. `jobs` sizes the
// worker pool (0 = hardware concurrency); the output does not depend on it.
std::vector<SweepRow> sweep_classify(std::size_t max_n, unsigned jobs = 0);

}  // namespace cypres
