#include "cli_app.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cypres/cyclo.hpp"
#include "cypres/verifier.hpp"
#include "parallel.hpp"

namespace cypres::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t k_max_exponent = 1'000'000;

// Applies CYPRES_MAX_BITS for the duration of one invocation.
class BitLimitGuard {
 public:
    BitLimitGuard() : previous_(coeff_bit_limit()) {}
    ~BitLimitGuard() { set_coeff_bit_limit(previous_); }

 private:
    unsigned long previous_;
};

void apply_env_bit_limit() {
    const char* env = std::getenv("CYPRES_MAX_BITS");
    if (env == nullptr || *env == '\0') {
        set_coeff_bit_limit(0);
        return;
    }
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0')
        throw DomainError("CYPRES_MAX_BITS must be a nonnegative integer");
    set_coeff_bit_limit(bits);
}

// ---- polynomial literals ----------------------------------------------

bool all_space(std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

// Sum of monomials: terms like "t^6", "-2t", "+1", separated by '+'/'-'.
IntPoly parse_poly_expression(std::string_view s) {
    IntPoly acc;
    std::size_t i = skip_space(s, 0);
    bool first = true;
    while (i < s.size()) {
        BigInt sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            i = skip_space(s, i + 1);
        } else if (!first) {
            throw SyntaxError("expected '+' or '-' between terms", i);
        }
        first = false;

        std::size_t digits_start = i;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        const bool have_coeff = !digits.empty();
        BigInt coeff = have_coeff ? BigInt(digits) : BigInt(1);
        coeff *= sign;

        std::size_t j = skip_space(s, i);
        if (j < s.size() && s[j] == '*') j = skip_space(s, j + 1);
        if (j < s.size() && s[j] == 't') {
            i = j + 1;
            std::size_t exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t exp_start = i;
                std::string exp_digits;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    exp_digits += s[i++];
                if (exp_digits.empty()) throw SyntaxError("expected exponent digits", exp_start);
                if (exp_digits.size() > 7) throw SyntaxError("exponent too large", exp_start);
                exponent = std::stoull(exp_digits);
                if (exponent > k_max_exponent) throw SyntaxError("exponent too large", exp_start);
            }
            acc = acc + IntPoly::monomial(exponent, coeff);
        } else if (have_coeff) {
            acc = acc + IntPoly::constant(coeff);
        } else {
            throw SyntaxError("expected coefficient or 't'", digits_start);
        }
        i = skip_space(s, i);
    }
    if (first) throw SyntaxError("empty polynomial", 0);
    return acc;
}

// Whitespace-separated ascending coefficients: "1 -1 1".
IntPoly parse_poly_coeff_list(std::string_view s) {
    std::vector<BigInt> coeffs;
    std::size_t i = skip_space(s, 0);
    while (i < s.size()) {
        std::size_t tok_start = i;
        std::string tok;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) tok += s[i++];
        std::size_t p = 0;
        if (tok[p] == '-' || tok[p] == '+') ++p;
        if (p == tok.size()) throw SyntaxError("expected integer coefficient", tok_start);
        for (; p < tok.size(); ++p)
            if (!std::isdigit(static_cast<unsigned char>(tok[p])))
                throw SyntaxError("expected integer coefficient", tok_start + p);
        coeffs.emplace_back(tok);
        i = skip_space(s, i);
    }
    if (coeffs.empty()) throw SyntaxError("empty polynomial", 0);
    return IntPoly(std::move(coeffs));
}

IntPoly parse_poly_literal(std::string_view s) {
    if (all_space(s)) throw SyntaxError("empty polynomial", 0);
    if (s.find('t') != std::string_view::npos) return parse_poly_expression(s);
    return parse_poly_coeff_list(s);
}

// ---- rendering ----------------------------------------------------------

std::string torsion_joined(const std::vector<BigInt>& torsion, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) out += sep;
        out += torsion[i].str();
    }
    return out;
}

ordered_json row_to_json(const SweepRow& row) {
    ordered_json j;
    j["n"] = row.n;
    j["m"] = row.m;
    j["k"] = row.k;
    j["rank"] = row.ab.free_rank;
    ordered_json torsion = ordered_json::array();
    for (const BigInt& d : row.ab.torsion) torsion.push_back(d.str());
    j["torsion"] = std::move(torsion);
    return j;
}

ordered_json report_to_json(const LemmaReport& rep) {
    ordered_json j;
    j["lemma_id"] = rep.lemma_id;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["applicable"] = rep.applicable;
    ordered_json hyps = ordered_json::array();
    for (const auto& [name, holds] : rep.hypotheses) {
        ordered_json h;
        h["name"] = name;
        h["holds"] = holds;
        hyps.push_back(std::move(h));
    }
    j["hypotheses"] = std::move(hyps);
    j["conclusion_checked"] = rep.conclusion_checked;
    ordered_json wit;
    for (const auto& [name, value] : rep.witnesses) wit[name] = value.str();
    j["witnesses"] = std::move(wit);
    return j;
}

void print_report_table(std::ostream& out, const LemmaReport& rep) {
    out << '[' << rep.lemma_id << "] n=" << rep.n << " m=" << rep.m;
    if (!rep.applicable) {
        out << "  not applicable:";
        for (const auto& [name, holds] : rep.hypotheses)
            if (!holds) out << "  !(" << name << ')';
        out << '\n';
        return;
    }
    out << (rep.conclusion_checked ? "  ok " : "  FAIL");
    for (const auto& [name, value] : rep.witnesses) out << "  " << name << '=' << value.str();
    out << '\n';
}

// ---- subcommand state ----------------------------------------------------

struct SharedOpts {
    std::string format = "table";
    unsigned jobs = 0;
};

void add_shared(CLI::App* cmd, SharedOpts& shared) {
    cmd->add_option("--format", shared.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--jobs", shared.jobs, "Worker pool size (0 = logical CPUs)")
        ->capture_default_str();
}

int cmd_ab(long long n, long long m, long long k, const SharedOpts& shared, std::ostream& out) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (m < 0 || m >= n) throw DomainError("m must satisfy 0 <= m < n");
    if (k < 0 || k >= n) throw DomainError("k must satisfy 0 <= k < n");
    const AbelianGroupStructure ab =
        abelianization(FibParams(static_cast<std::size_t>(n), m, k));

    if (shared.format == "json") {
        ordered_json j;
        j["n"] = n;
        j["m"] = m;
        j["k"] = k;
        j["rank"] = ab.free_rank;
        ordered_json torsion = ordered_json::array();
        for (const BigInt& d : ab.torsion) torsion.push_back(d.str());
        j["torsion"] = std::move(torsion);
        out << j.dump() << '\n';
    } else if (shared.format == "csv") {
        out << "n,m,k,rank,torsion\n"
            << n << ',' << m << ',' << k << ',' << ab.free_rank << ','
            << torsion_joined(ab.torsion, ";") << '\n';
    } else {
        out << ab.str() << '\n';
    }
    return 0;
}

int cmd_sweep(std::size_t max_n, const std::string& filter, const SharedOpts& shared,
              std::ostream& out, std::ostream& err) {
    const std::vector<SweepRow> rows = sweep_classify(max_n, shared.jobs);

    // The classification predicate over the full computed range: rank-2 pairs
    // are exactly {6 | n, m = 2 (mod 6)}, and the torsion-free ones exactly
    // {m = 2}.
    std::set<std::pair<std::size_t, std::size_t>> rank2, rank2free, want2, want2free;
    for (const SweepRow& r : rows) {
        rank2.insert({r.n, r.m});
        if (r.ab.is_free()) rank2free.insert({r.n, r.m});
    }
    for (std::size_t n = 6; n <= max_n; n += 6) {
        want2free.insert({n, 2});
        for (std::size_t m = 2; m < n; m += 6) want2.insert({n, m});
    }
    const bool holds = rank2 == want2 && rank2free == want2free;

    std::vector<const SweepRow*> shown;
    for (const SweepRow& r : rows)
        if (filter != "rank2free" || r.ab.is_free()) shown.push_back(&r);

    const std::string summary =
        holds ? "classification holds (n <= " + std::to_string(max_n) + ")"
              : "classification MISMATCH (n <= " + std::to_string(max_n) + ")";

    if (shared.format == "json") {
        ordered_json j;
        j["max_n"] = max_n;
        j["filter"] = filter;
        ordered_json jrows = ordered_json::array();
        for (const SweepRow* r : shown) jrows.push_back(row_to_json(*r));
        j["rows"] = std::move(jrows);
        j["classification_holds"] = holds;
        out << j.dump() << '\n';
    } else if (shared.format == "csv") {
        out << "n,m,k,rank,torsion\n";
        for (const SweepRow* r : shown)
            out << r->n << ',' << r->m << ',' << r->k << ',' << r->ab.free_rank << ','
                << torsion_joined(r->ab.torsion, ";") << '\n';
        err << summary << '\n';
    } else {
        out << std::setw(5) << "n" << std::setw(5) << "m" << std::setw(3) << "k"
            << std::setw(6) << "rank" << "  torsion\n";
        for (const SweepRow* r : shown) {
            const std::string t = torsion_joined(r->ab.torsion, ";");
            out << std::setw(5) << r->n << std::setw(5) << r->m << std::setw(3) << r->k
                << std::setw(6) << r->ab.free_rank << "  " << (t.empty() ? "-" : t) << '\n';
        }
        out << summary << '\n';
    }
    return holds ? 0 : 1;
}

std::pair<unsigned, unsigned> parse_s_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const unsigned s = static_cast<unsigned>(std::stoul(text));
            return {s, s};
        }
        const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
        const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        if (lo > hi) throw DomainError("--s range is empty");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw DomainError("--s expects S or LO..HI");
    } catch (const std::out_of_range&) {
        throw DomainError("--s range out of range");
    }
}

int cmd_verify(const std::string& lemma, std::size_t max_n, const std::string& s_range,
               const SharedOpts& shared, std::ostream& out, std::ostream& err) {
    static const std::set<std::string> known = {"lucas", "half", "vg1",
                                                "grow", "minimality", "cases"};
    if (!known.count(lemma)) throw DomainError("unknown lemma id '" + lemma + "'");

    // Instance grids. Everything but `grow` walks (n, m) with 6 | n and
    // m = 2 (mod 6); `cases` includes m = 2, the rest need m > 2.
    std::vector<std::pair<std::size_t, std::size_t>> grid;
    std::vector<std::pair<unsigned, unsigned>> grow_grid;
    if (lemma == "grow") {
        const auto [lo, hi] = parse_s_range(s_range);
        for (unsigned s = lo; s <= hi; ++s)
            for (unsigned b = 1; b <= 2; ++b) grow_grid.emplace_back(s, b);
    } else if (lemma == "half") {
        for (std::size_t n = 6; n <= max_n; n += 6) grid.emplace_back(n, 2 + n / 2);
    } else {
        const std::size_t m_start = (lemma == "cases") ? 2 : 8;
        for (std::size_t n = 6; n <= max_n; n += 6)
            for (std::size_t m = m_start; m < n; m += 6) grid.emplace_back(n, m);
    }

    const std::size_t count = lemma == "grow" ? grow_grid.size() : grid.size();
    std::vector<LemmaReport> reports(count);
    detail::parallel_for(count, shared.jobs, [&](std::size_t i) {
        if (lemma == "grow")
            reports[i] = verify_grow(grow_grid[i].first, grow_grid[i].second);
        else if (lemma == "half")
            reports[i] = verify_half(grid[i].first);
        else if (lemma == "lucas")
            reports[i] = verify_lucas(grid[i].first, grid[i].second);
        else if (lemma == "vg1")
            reports[i] = verify_vg1(grid[i].first, grid[i].second);
        else if (lemma == "minimality")
            reports[i] = verify_minimality(grid[i].first, grid[i].second);
        else
            reports[i] = verify_cases(grid[i].first, grid[i].second);
    });

    std::vector<const LemmaReport*> applicable;
    std::size_t failed = 0;
    for (const LemmaReport& rep : reports)
        if (rep.applicable) {
            applicable.push_back(&rep);
            if (!rep.conclusion_checked) ++failed;
        }

    std::string summary;
    if (applicable.empty())
        summary = "verify " + lemma + ": no applicable instances in range";
    else if (failed == 0)
        summary = "verify " + lemma + ": all " + std::to_string(applicable.size()) +
                  " applicable instances passed";
    else
        summary = "verify " + lemma + ": " + std::to_string(failed) + " of " +
                  std::to_string(applicable.size()) + " applicable instances FAILED";

    if (shared.format == "json") {
        ordered_json j;
        j["lemma"] = lemma;
        ordered_json jreports = ordered_json::array();
        for (const LemmaReport* rep : applicable) jreports.push_back(report_to_json(*rep));
        j["reports"] = std::move(jreports);
        j["applicable_count"] = applicable.size();
        j["all_passed"] = failed == 0;
        out << j.dump() << '\n';
    } else if (shared.format == "csv") {
        out << "lemma,n,m,applicable,conclusion_checked,witnesses\n";
        for (const LemmaReport* rep : applicable) {
            std::string wit;
            for (const auto& [name, value] : rep->witnesses) {
                if (!wit.empty()) wit += ';';
                wit += name + "=" + value.str();
            }
            out << rep->lemma_id << ',' << rep->n << ',' << rep->m << ','
                << (rep->applicable ? 1 : 0) << ',' << (rep->conclusion_checked ? 1 : 0) << ','
                << wit << '\n';
        }
        err << summary << '\n';
    } else {
        for (const LemmaReport* rep : applicable) print_report_table(out, *rep);
        out << summary << '\n';
    }
    return failed == 0 ? 0 : 1;
}

int cmd_res(const std::string& p_text, const std::string& q_text, const SharedOpts& shared,
            std::ostream& out) {
    const IntPoly p = parse_poly_literal(p_text);
    const IntPoly q = parse_poly_literal(q_text);
    const BigInt value = resultant(p, q);
    if (shared.format == "json") {
        ordered_json j;
        j["p"] = p.str();
        j["q"] = q.str();
        j["value"] = value.str();
        out << j.dump() << '\n';
    } else if (shared.format == "csv") {
        out << "value\n" << value << '\n';
    } else {
        out << value << '\n';
    }
    return 0;
}

int cmd_cyclo(long long d, const SharedOpts& shared, std::ostream& out) {
    if (d < 1) throw DomainError("cyclo requires d >= 1");
    if (d > static_cast<long long>(k_max_exponent)) throw DomainError("cyclo index too large");
    const IntPoly phi = cyclotomic(static_cast<std::uint64_t>(d));
    if (shared.format == "json") {
        ordered_json j;
        j["d"] = d;
        ordered_json coeffs = ordered_json::array();
        for (const BigInt& c : phi.coeffs()) coeffs.push_back(c.str());
        j["coeffs"] = std::move(coeffs);
        out << j.dump() << '\n';
    } else if (shared.format == "csv") {
        out << "d,coeffs\n" << d << ',';
        const auto& c = phi.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ";" : "") << c[i];
        out << '\n';
    } else {
        out << phi.str() << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    BitLimitGuard guard;

    CLI::App app{"Exact abelianization invariants of the cyclically presented groups "
                 "G_n(m,k) = <x_0..x_{n-1} | x_i x_{i+m} = x_{i+k}>"};
    app.name("cypres");
    app.require_subcommand(1);

    SharedOpts shared;
    long long ab_n = 0, ab_m = 0, ab_k = 1;
    CLI::App* ab = app.add_subcommand("ab", "Abelianization of one group G_n(m,k)");
    ab->add_option("n", ab_n, "Number of generators")->required();
    ab->add_option("m", ab_m, "First shift")->required();
    ab->add_option("--k", ab_k, "Second shift (default 1: the H(n,m) family)");
    add_shared(ab, shared);

    std::size_t sweep_max_n = 120;
    std::string sweep_filter = "rank2";
    CLI::App* sweep = app.add_subcommand("sweep", "Rank-2 classification sweep over all (n,m)");
    sweep->add_option("max_n", sweep_max_n, "Upper bound on n")->required();
    sweep->add_option("--filter", sweep_filter, "Row filter")
        ->check(CLI::IsMember({"rank2", "rank2free", "all"}))
        ->capture_default_str();
    add_shared(sweep, shared);

    std::string verify_lemma;
    std::size_t verify_max_n = 120;
    std::string verify_s = "2..4";
    CLI::App* verify = app.add_subcommand("verify", "Run one named arithmetic check over a range");
    verify->add_option("lemma", verify_lemma, "One of lucas|half|vg1|grow|minimality|cases")
        ->required();
    verify->add_option("--max-n", verify_max_n, "Upper bound on n")->capture_default_str();
    verify->add_option("--s", verify_s, "s range for grow: S or LO..HI")->capture_default_str();
    add_shared(verify, shared);

    std::string res_p, res_q;
    CLI::App* res = app.add_subcommand("res", "Exact |Res(p, q)| of two integer polynomials");
    res->add_option("p", res_p, "Polynomial: 'c0 c1 c2 ...' or 't^k' expressions")->required();
    res->add_option("--against", res_q, "Second polynomial")->required();
    add_shared(res, shared);

    long long cyclo_d = 0;
    CLI::App* cyc = app.add_subcommand("cyclo", "Coefficients of a cyclotomic polynomial");
    cyc->add_option("d", cyclo_d, "Order (>= 1)")->required();
    add_shared(cyc, shared);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cypres");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        apply_env_bit_limit();
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (ab->parsed()) return cmd_ab(ab_n, ab_m, ab_k, shared, out);
        if (sweep->parsed()) return cmd_sweep(sweep_max_n, sweep_filter, shared, out, err);
        if (verify->parsed())
            return cmd_verify(verify_lemma, verify_max_n, verify_s, shared, out, err);
        if (res->parsed()) return cmd_res(res_p, res_q, shared, out);
        if (cyc->parsed()) return cmd_cyclo(cyclo_d, shared, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ZeroPolynomial& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace cypres::cli
