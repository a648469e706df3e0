#include "paldef/suite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "paldef/naive.hpp"
#include "paldef/simple_path_graph.hpp"
#include "paldef/verifier.hpp"

namespace paldef::suite {

namespace {

std::string ternary_prefix_through(std::size_t level, Word& out) {
    std::size_t len = 1;
    for (std::size_t k = 1; k <= level; ++k) len = 2 * len + 2 * k;
    out = WordSource::builtin("ternary-oddity").prefix(len);
    return std::to_string(len);
}

ScenarioResult oracle_defect() {
    ScenarioResult r{1, "oracle", "defect agrees with direct palindrome enumeration", false, ""};
    std::size_t checked = 0;
    // exhaustive binary words up to length 14
    for (std::size_t n = 0; n <= 14; ++n) {
        for (std::uint64_t x = 0; x < (1ull << n); ++x) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += (x >> i) & 1 ? 'b' : 'a';
            const long long by_index = PalIndex::build(Word::parse(s)).defect();
            const long long by_enum = naive::defect(s);
            if (by_index != by_enum) {
                r.detail = "mismatch on '" + s + "': " + std::to_string(by_index) +
                           " vs " + std::to_string(by_enum);
                return r;
            }
            ++checked;
        }
    }
    // random ternary words up to length 30, fixed seed
    std::mt19937 gen(948571);
    for (int k = 0; k < 10000; ++k) {
        const std::size_t n = 1 + gen() % 30;
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('a' + gen() % 3);
        if (PalIndex::build(Word::parse(s)).defect() != naive::defect(s)) {
            r.detail = "mismatch on random word '" + s + "'";
            return r;
        }
        ++checked;
    }
    r.pass = true;
    r.detail = std::to_string(checked) + " words checked";
    return r;
}

ScenarioResult ab_omega_gap() {
    ScenarioResult r{2, "ab-omega", "ab^w: defect 0 with truncated T sum -1", false, ""};
    const ConjectureReport rep =
        conjecture_report(WordSource::builtin("ab-omega"), 1000, 100);
    const bool ok = rep.defect == 0 && rep.t_sum == -1 && rep.verdict == Verdict::gap &&
                    rep.gap == -1 && rep.closure.first_violation == 2;
    r.pass = ok;
    std::ostringstream d;
    d << "defect=" << rep.defect << " t_sum=" << rep.t_sum << " verdict="
      << verdict_string(rep) << " first closure violation at n="
      << (rep.closure.first_violation ? std::to_string(*rep.closure.first_violation) : "-");
    r.detail = d.str();
    return r;
}

ScenarioResult rote_equality() {
    ScenarioResult r{3, "rote", "Rote word: T(n) = 0 for n <= 64, defect 0, equality", false, ""};
    const WordSource src = WordSource::builtin("rote");
    const Word prefix = src.prefix(20000);
    const FactorIndex fidx = FactorIndex::build(prefix, 64);
    const PalIndex pidx = PalIndex::build(prefix);
    const ConjectureReport rep = conjecture_report_from(src.id(), fidx, pidx, 64);
    bool zeros = true;
    std::size_t bad_n = 0;
    for (std::size_t n = 0; n <= 64; ++n)
        if (rep.t.values[n] != 0) {
            zeros = false;
            bad_n = n;
            break;
        }
    r.pass = zeros && rep.defect == 0 && rep.verdict == Verdict::equality;
    std::ostringstream d;
    if (!zeros) d << "T(" << bad_n << ") != 0; ";
    d << "defect=" << rep.defect << " verdict=" << verdict_string(rep);
    r.detail = d.str();
    return r;
}

ScenarioResult ternary_example() {
    ScenarioResult r{4, "ternary",
                     "ternary block word through level 6: P(n)=2 and dC>=3 on [2,20]", false, ""};
    Word prefix;
    const std::string len = ternary_prefix_through(6, prefix);
    const FactorIndex fidx = FactorIndex::build(prefix, 21);
    const PalIndex pidx = PalIndex::build(prefix);

    std::vector<std::size_t> p_fail, c_fail;
    for (std::size_t n = 2; n <= 20; ++n) {
        if (pidx.palindromic_complexity(n) != 2) p_fail.push_back(n);
        if (static_cast<long long>(fidx.factor_complexity(n + 1)) -
                static_cast<long long>(fidx.factor_complexity(n)) < 3)
            c_fail.push_back(n);
    }
    const bool closure_ok =
        !fidx.is_closed_under_reversal(2) && fidx.occurrences("cb").empty();
    const std::size_t increases = pidx.defective_positions().size();

    r.pass = p_fail.empty() && c_fail.empty() && closure_ok && increases >= 5;
    std::ostringstream d;
    d << "prefix length " << len << "; ";
    if (!p_fail.empty())
        d << "P(n)=2 fails at n=" << p_fail.front() << ".." << p_fail.back()
          << " (blocks in this prefix reach length 6 only); ";
    if (!c_fail.empty()) {
        d << "dC>=3 fails at n=";
        for (std::size_t i = 0; i < c_fail.size(); ++i) d << (i ? "," : "") << c_fail[i];
        d << "; ";
    }
    d << "cb absent=" << (closure_ok ? "yes" : "NO") << "; defect increases=" << increases;
    r.detail = d.str();
    return r;
}

ScenarioResult periodic_exhaustive() {
    ScenarioResult r{5, "periodic",
                     "all primitive binary periods |w| <= 8: periodic identity / divergence shape",
                     false, ""};
    std::size_t pq_count = 0, other_count = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint64_t x = 0; x < (1ull << n); ++x) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += (x >> i) & 1 ? 'b' : 'a';
            if (!is_primitive(s)) continue;
            const Word w = Word::parse(s, Alphabet("ab"));
            const PeriodicDefect pd = periodic_defect(w);
            const WordSource src = WordSource::periodic(w);
            if (pd.finite) {
                ++pq_count;
                const Word prefix = src.prefix(6 * n);
                const FactorIndex fidx = FactorIndex::build(prefix, 2 * n);
                const PalIndex pidx = PalIndex::build(prefix);
                const TSeries t = t_series(fidx, pidx, 2 * n);
                if (2 * pd.value != t.sum()) {
                    r.detail = "identity fails for period '" + s + "': 2*" +
                               std::to_string(pd.value) + " vs " + std::to_string(t.sum());
                    return r;
                }
            } else {
                ++other_count;
                const Word prefix = src.prefix(200);
                const PalIndex pidx = PalIndex::build(prefix);
                bool tail_defective = true;
                for (std::size_t i = 151; i <= 200; ++i)
                    if (pidx.defect_at(i) == pidx.defect_at(i - 1)) {
                        tail_defective = false;
                        break;
                    }
                bool few_pals_t2 = pidx.max_palindrome_length() < 2 * n;
                if (few_pals_t2) {
                    const FactorIndex fidx = FactorIndex::build(prefix, 3 * n);
                    const TSeries t = t_series(fidx, pidx, 3 * n);
                    for (std::size_t k = 2 * n; k <= 3 * n; ++k)
                        if (t.values[k] < 2) {
                            few_pals_t2 = false;
                            break;
                        }
                }
                if (!tail_defective && !few_pals_t2) {
                    r.detail = "no divergence shape for period '" + s + "'";
                    return r;
                }
            }
        }
    }
    r.pass = true;
    r.detail = std::to_string(pq_count) + " two-palindrome periods, " +
               std::to_string(other_count) + " others";
    return r;
}

ScenarioResult graph_characterization() {
    ScenarioResult r{6, "graph", "graph zero test matches T(n) = 0 for n <= 30", false, ""};
    struct Subject {
        WordSource src;
        std::size_t L;
    };
    const std::vector<Subject> subjects = {
        {WordSource::builtin("fibonacci"), 10000},
        {WordSource::builtin("rote"), 20000},
        {WordSource::builtin("thue-morse"), 16384},
        {WordSource::periodic(Word::parse("ab")), 500},
        {WordSource::periodic(Word::parse("abba")), 500},
        {WordSource::periodic(Word::parse("aaab")), 500},
        {WordSource::periodic(Word::parse("aabcaacb")), 600}, // defect 2, T(1) = T(2) = 2
    };
    std::size_t tested = 0, skipped = 0;
    for (const Subject& sub : subjects) {
        const Word prefix = sub.src.prefix(sub.L);
        const FactorIndex fidx = FactorIndex::build(prefix, 31);
        const PalIndex pidx = PalIndex::build(prefix);
        const TSeries t = t_series(fidx, pidx, 31);
        for (std::size_t n = 0; n <= 30; ++n) {
            if (!fidx.is_closed_under_reversal(n) || !fidx.is_closed_under_reversal(n + 1)) {
                ++skipped;
                continue;
            }
            const SimplePathGraph g = SimplePathGraph::build(fidx, n, n + 400);
            const GraphZeroTest zt = graph_zero_test(g);
            if (zt.indeterminate) {
                ++skipped;
                continue;
            }
            if (zt.zero != (t.values[n] == 0)) {
                r.detail = sub.src.id() + " n=" + std::to_string(n) + ": graph says " +
                           (zt.zero ? "zero" : "nonzero") + " (" + zt.diagnosis +
                           ") but T(n)=" + std::to_string(t.values[n]);
                return r;
            }
            ++tested;
        }
    }
    r.pass = tested >= 150;
    r.detail = std::to_string(tested) + " (word,n) pairs tested, " +
               std::to_string(skipped) + " skipped as indeterminate";
    return r;
}

ScenarioResult squares_present() {
    ScenarioResult r{7, "squares", "large squares exist in fibonacci and Rote prefixes", false, ""};
    struct Case {
        const char* name;
        std::size_t L;
        std::vector<std::size_t> min_halves;
    };
    const std::vector<Case> cases = {{"fibonacci", 10000, {10, 50, 100}},
                                     {"rote", 20000, {10, 50}}};
    std::ostringstream d;
    for (const Case& c : cases) {
        const Word prefix = WordSource::builtin(c.name).prefix(c.L);
        const FactorIndex fidx = FactorIndex::build(prefix, 8);
        for (std::size_t min_half : c.min_halves) {
            const auto halves = fidx.squares(min_half);
            if (halves.empty()) {
                r.detail = std::string(c.name) + ": no square with half >= " +
                           std::to_string(min_half);
                return r;
            }
            // verify the smallest reported half by direct search
            const std::string& w = halves.front();
            if (w.size() < min_half ||
                prefix.text().find(w + w) == std::string::npos) {
                r.detail = std::string(c.name) + ": reported half '" + w + "' not verified";
                return r;
            }
            d << c.name << ">=" << min_half << ": " << halves.size()
              << " halves, smallest " << w.size() << "; ";
        }
    }
    r.pass = true;
    r.detail = d.str();
    return r;
}

ScenarioResult reduction_check() {
    ScenarioResult r{8, "reduction", "periodic reduction with M = 20 on fibonacci and Rote",
                     false, ""};
    std::ostringstream d;
    for (const char* name : {"fibonacci", "rote"}) {
        const WordSource src = WordSource::builtin(name);
        const std::size_t L = std::string(name) == "rote" ? 20000 : 10000;
        ReductionOptions opts;
        opts.n_max = 60;
        opts.M = 20;
        const ReductionResult res = periodic_reduction(src, L, opts);
        const Word prefix = src.prefix(L);
        bool coverage = res.found;
        if (res.found) {
            // independent verification: ww occurs and w covers the length-20 language
            if (prefix.text().find(res.w + res.w) == std::string::npos) coverage = false;
            for (const auto& f : naive::factors(prefix.text(), 20))
                if (res.w.find(f) == std::string::npos) {
                    coverage = false;
                    break;
                }
        }
        const bool ok = res.found && coverage && res.claim1.has_value() && res.claim2 &&
                        res.claim3 && res.identity;
        if (!ok) {
            r.detail = std::string(name) + ": found=" + (res.found ? "yes" : "no") +
                       " coverage=" + (coverage ? "yes" : "no") +
                       " claims=" + (res.claim1 ? "1" : "-") + (res.claim2 ? "2" : "-") +
                       (res.claim3 ? "3" : "-") + " identity=" + (res.identity ? "yes" : "no") +
                       (res.reason.empty() ? "" : " (" + res.reason + ")");
            return r;
        }
        d << name << ": |w|=" << res.w.size() << " D(v)=" << res.d_ww
          << " sum T_v=" << res.t_v_sum << "; ";
    }
    r.pass = true;
    r.detail = d.str();
    return r;
}

ScenarioResult divergence_check() {
    ScenarioResult r{9, "divergence", "Thue-Morse at 2^14: both sides exceed 10", false, ""};
    const ConjectureReport rep =
        conjecture_report(WordSource::builtin("thue-morse"), 16384, 128);
    // values pinned by an independent enumeration run
    const bool ok = rep.defect == 3412 && rep.t_sum == 168 && rep.defect >= 10 &&
                    rep.t_sum >= 10 && rep.verdict == Verdict::divergent_both;
    r.pass = ok;
    std::ostringstream d;
    d << "defect=" << rep.defect << " (expected 3412), t_sum=" << rep.t_sum
      << " (expected 168), verdict=" << verdict_string(rep);
    r.detail = d.str();
    return r;
}

ScenarioResult oddity_bound() {
    ScenarioResult r{10, "oddity", "defect bounds the number of oddities", false, ""};
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::uint64_t x = 0; x < (1ull << n); ++x) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += (x >> i) & 1 ? 'b' : 'a';
            const Word w = Word::parse(s, Alphabet("ab"));
            const FactorIndex fidx = FactorIndex::build(w, n - 1);
            const long long d = PalIndex::build(w).defect();
            const long long oddities =
                static_cast<long long>(fidx.oddities(n - 1).size());
            if (d < oddities) {
                r.detail = "counterexample '" + s + "': defect " + std::to_string(d) +
                           " < oddities " + std::to_string(oddities);
                return r;
            }
        }
    }
    std::ostringstream d;
    d << "binary words to length 12 exhaustively";
    for (const char* name : {"fibonacci", "thue-morse"}) {
        const Word prefix = WordSource::builtin(name).prefix(4096);
        const FactorIndex fidx = FactorIndex::build(prefix, 64);
        const long long defect_value = PalIndex::build(prefix).defect();
        const long long oddities = static_cast<long long>(fidx.oddities(64).size());
        if (defect_value < oddities) {
            r.detail = std::string(name) + ": defect " + std::to_string(defect_value) +
                       " < oddities " + std::to_string(oddities);
            return r;
        }
        d << "; " << name << "@4096: defect=" << defect_value << " oddities=" << oddities;
    }
    r.pass = true;
    r.detail = d.str();
    return r;
}

} // namespace

std::vector<ScenarioResult> run(const std::string& only_tag) {
    struct Entry {
        const char* tag;
        ScenarioResult (*fn)();
    };
    const std::vector<Entry> scenarios = {
        {"oracle", oracle_defect},       {"ab-omega", ab_omega_gap},
        {"rote", rote_equality},         {"ternary", ternary_example},
        {"periodic", periodic_exhaustive}, {"graph", graph_characterization},
        {"squares", squares_present},    {"reduction", reduction_check},
        {"divergence", divergence_check}, {"oddity", oddity_bound},
    };
    std::vector<ScenarioResult> rows;
    for (const Entry& e : scenarios)
        if (only_tag.empty() || only_tag == e.tag) rows.push_back(e.fn());
    return rows;
}

std::string format_table(const std::vector<ScenarioResult>& rows) {
    std::ostringstream out;
    for (const auto& row : rows)
        out << (row.pass ? "PASS" : "FAIL") << "  #" << row.id << " [" << row.tag << "] "
            << row.title << " - " << row.detail << "\n";
    std::size_t failed = 0;
    for (const auto& row : rows)
        if (!row.pass) ++failed;
    out << (failed == 0 ? "all scenarios passed" : std::to_string(failed) + " scenario(s) failed")
        << " (" << rows.size() << " run)\n";
    return out.str();
}

} // namespace paldef::suite
