#include "paldef/verifier.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "paldef/lce.hpp"

namespace paldef {

namespace {

ClosureStatus closure_status(const FactorIndex& fidx, std::size_t up_to) {
    ClosureStatus c;
    for (std::size_t n = 1; n <= up_to; ++n) {
        if (fidx.is_closed_under_reversal(n)) {
            c.closed_up_to = n;
            continue;
        }
        c.first_violation = n;
        const std::vector<std::string> fs = fidx.factors(n);
        for (const std::string& f : fs) {
            std::string rev = reversed_text(f);
            if (!std::binary_search(fs.begin(), fs.end(), rev)) {
                c.missing_factor = rev;
                break;
            }
        }
        break;
    }
    return c;
}

std::optional<std::size_t> last_defective_position(const PalIndex& pidx) {
    const auto& profile = pidx.defect_profile();
    for (std::size_t i = profile.size(); i-- > 1;)
        if (profile[i] == profile[i - 1] + 1) return i;
    return std::nullopt;
}

} // namespace

std::string verdict_string(const ConjectureReport& r) {
    switch (r.verdict) {
        case Verdict::equality: return "equality";
        case Verdict::gap: return "gap(" + std::to_string(r.gap) + ")";
        case Verdict::divergent_both: return "divergent-both";
        case Verdict::inapplicable: return "inapplicable(" + r.reason + ")";
    }
    return "unknown";
}

ConjectureReport conjecture_report_from(std::string word_id, const FactorIndex& fidx,
                                        const PalIndex& pidx, std::size_t n_max,
                                        long long divergence_threshold) {
    ConjectureReport r;
    r.word_id = std::move(word_id);
    r.L = fidx.word().size();
    r.n_max = n_max;
    r.divergence_threshold = divergence_threshold;

    r.defect = pidx.defect();
    r.last_defective = last_defective_position(pidx);
    r.defect_flat_last_half = !r.last_defective || *r.last_defective <= r.L / 2;

    r.t = t_series(fidx, pidx, n_max);
    r.t_sum = r.t.sum();
    r.t_tail_ok = r.t.tail_zero_from && *r.t.tail_zero_from <= (3 * n_max) / 4;

    r.closure = closure_status(fidx, n_max + 1);
    r.converged = r.t_tail_ok && r.defect_flat_last_half;

    if (r.converged && 2 * r.defect == r.t_sum) {
        r.verdict = Verdict::equality;
    } else if (r.defect >= divergence_threshold && r.t_sum >= divergence_threshold &&
               !r.defect_flat_last_half) {
        r.verdict = Verdict::divergent_both;
    } else if (r.converged) {
        r.verdict = Verdict::gap;
        r.gap = r.t_sum - 2 * r.defect;
    } else {
        r.verdict = Verdict::inapplicable;
        r.reason = !r.t_tail_ok ? "T tail not zero over the last quarter of the range"
                                : "defect still growing in the last half of the prefix";
    }
    return r;
}

ConjectureReport conjecture_report(const WordSource& source, std::size_t L,
                                   std::size_t n_max, long long divergence_threshold) {
    if (n_max + 1 > L)
        throw std::invalid_argument("conjecture_report: need n_max + 1 <= L");
    const Word prefix = source.prefix(L);
    const FactorIndex fidx = FactorIndex::build(prefix, n_max);
    const PalIndex pidx = PalIndex::build(prefix);
    return conjecture_report_from(source.id(), fidx, pidx, n_max, divergence_threshold);
}

EquivalenceAudit equivalence_audit_from(const FactorIndex& fidx, const PalIndex& pidx,
                                        AuditCaps caps) {
    caps.pal_cap = std::min(caps.pal_cap, fidx.n_max());
    caps.factor_cap = std::min(caps.factor_cap, fidx.n_max());
    caps.n_max = std::min(caps.n_max, fidx.n_max());

    EquivalenceAudit a;
    a.caps = caps;

    const auto last_def = last_defective_position(pidx);
    a.defect_flat = !last_def || *last_def <= fidx.word().size() / 2;

    // K: palindromes with a non-palindromic complete return word
    std::size_t worst_k = 0;
    bool k_hits_cap = false;
    for (std::size_t n = 1; n <= caps.pal_cap; ++n) {
        for (const std::string& f : fidx.factors(n)) {
            if (!is_palindrome(f)) continue;
            for (const std::string& v : fidx.complete_return_words(f).words)
                if (!is_palindrome(v)) {
                    worst_k = n;
                    if (n == caps.pal_cap) k_hits_cap = true;
                    break;
                }
        }
    }
    if (!k_hits_cap) a.K = std::max<std::size_t>(1, worst_k + 1);

    // H: factors whose longest palindromic suffix reoccurs inside them
    std::size_t worst_h = 0;
    bool h_hits_cap = false;
    for (std::size_t n = 1; n <= caps.factor_cap; ++n) {
        for (const std::string& f : fidx.factors(n)) {
            std::string_view fv(f);
            std::string_view lps;
            for (std::size_t j = 0; j < fv.size(); ++j)
                if (is_palindrome(fv.substr(j))) {
                    lps = fv.substr(j);
                    break;
                }
            if (fv.find(lps) != fv.size() - lps.size()) {
                worst_h = n;
                if (n == caps.factor_cap) h_hits_cap = true;
                break;
            }
        }
    }
    if (!h_hits_cap) a.H = std::max<std::size_t>(1, worst_h + 1);

    const TSeries t = t_series(fidx, pidx, caps.n_max);
    a.N = t.tail_zero_from;

    if (a.defect_flat) {
        a.consistent = a.K && a.H && a.N;
        if (!a.K) a.notes.push_back("defect flat but palindromic-return bound K not found within cap");
        if (!a.H) a.notes.push_back("defect flat but unioccurrent-suffix bound H not found within cap");
        if (!a.N) a.notes.push_back("defect flat but zero T tail not reached within cap");
    } else {
        if (!a.K) a.notes.push_back("statement(2) fails within cap: non-palindromic complete return words at all scanned lengths");
        if (!a.H) a.notes.push_back("statement(3) fails within cap: reoccurring longest palindromic suffixes at all scanned lengths");
        if (!a.N) a.notes.push_back("statement(4) fails within cap: T tail not zero");
    }
    return a;
}

EquivalenceAudit equivalence_audit(const WordSource& source, std::size_t L, AuditCaps caps) {
    const Word prefix = source.prefix(L);
    const std::size_t cap = std::max({caps.pal_cap, caps.factor_cap, caps.n_max});
    const FactorIndex fidx = FactorIndex::build(prefix, cap);
    const PalIndex pidx = PalIndex::build(prefix);
    return equivalence_audit_from(fidx, pidx, caps);
}

std::optional<std::pair<Word, Word>> two_palindrome_decomposition(const Word& w) {
    const std::string_view s = w.text();
    for (std::size_t k = 0; k <= s.size(); ++k)
        if (is_palindrome(s.substr(0, k)) && is_palindrome(s.substr(k)))
            return std::make_pair(w.subword(0, k), w.subword(k, s.size() - k));
    return std::nullopt;
}

PeriodicDefect periodic_defect(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periodic_defect: empty period");
    PeriodicDefect out;
    const std::size_t root_len = primitive_root_length(w.text());
    out.reduced_to_root = root_len != w.size();
    const Word root = w.subword(0, root_len);
    out.root = root.text();
    if (!two_palindrome_decomposition(root)) {
        out.finite = false;
        return out;
    }
    out.finite = true;
    const Word square(root.alphabet(), root.text() + root.text());
    out.value = PalIndex::build(square).defect();
    return out;
}

namespace {

std::string repeat_to(std::string_view w, std::size_t length) {
    std::string out;
    out.reserve(length);
    while (out.size() + w.size() <= length) out += w;
    out += w.substr(0, length - out.size());
    return out;
}

} // namespace

ReductionResult periodic_reduction(const WordSource& source, std::size_t L,
                                   const ReductionOptions& options) {
    ReductionResult r;
    const Word prefix = source.prefix(L);
    const std::size_t n_max = std::min(options.n_max, prefix.size() - 1);
    const FactorIndex fidx = FactorIndex::build(prefix, n_max);
    const PalIndex pidx = PalIndex::build(prefix);

    const TSeries t_u = t_series(fidx, pidx, n_max);
    r.N_bound = t_u.tail_zero_from;

    const auto last_def = last_defective_position(pidx);
    const bool flat = !last_def || *last_def <= prefix.size() / 2;
    if (!flat) {
        r.reason = "defect still growing in the last half of the prefix";
        return r;
    }
    if (!r.N_bound) {
        r.reason = "no zero T tail within n_max";
        return r;
    }

    if (options.M) {
        r.M = *options.M;
    } else {
        AuditCaps caps;
        caps.pal_cap = std::min<std::size_t>(n_max, 32);
        caps.factor_cap = std::min<std::size_t>(n_max, 48);
        caps.n_max = n_max;
        const EquivalenceAudit audit = equivalence_audit_from(fidx, pidx, caps);
        r.H_bound = audit.H;
        if (!audit.H) {
            r.reason = "unioccurrent-suffix bound H not found within cap";
            return r;
        }
        r.M = std::max(*r.N_bound, *audit.H);
    }
    if (r.M == 0) r.M = 1;
    if (r.M > n_max) {
        r.reason = "M exceeds the factor index cap";
        return r;
    }
    r.applicable = true;

    // smallest square half that covers every length-M factor
    const std::string_view text = prefix.text();
    const std::vector<std::string> cover = fidx.factors(r.M);
    const Lce lce(text);
    std::vector<std::uint32_t> hits;
    for (std::size_t half = r.M; 2 * half <= text.size() && !r.found; ++half) {
        hits.clear();
        for (std::size_t i = 0; i + 2 * half <= text.size(); ++i)
            if (lce.lce(i, i + half) >= half) hits.push_back(static_cast<std::uint32_t>(i));
        if (hits.empty()) continue;
        r.largest_square_half = half;
        std::sort(hits.begin(), hits.end(), [&](std::uint32_t a, std::uint32_t b) {
            return lce.rank(a) < lce.rank(b);
        });
        // one representative position per distinct half, then earliest first
        std::vector<std::uint32_t> reps;
        for (std::size_t k = 0; k < hits.size(); ++k) {
            if (k > 0 && lce.lce(hits[k - 1], hits[k]) >= half) {
                reps.back() = std::min(reps.back(), hits[k]);
                continue;
            }
            reps.push_back(hits[k]);
        }
        std::sort(reps.begin(), reps.end());
        for (std::uint32_t pos : reps) {
            const std::string_view w = text.substr(pos, half);
            bool covers = true;
            for (const std::string& f : cover)
                if (w.find(f) == std::string_view::npos) {
                    covers = false;
                    break;
                }
            if (covers) {
                r.found = true;
                r.w = std::string(w);
                r.w_position = pos;
                break;
            }
        }
    }
    if (!r.found) {
        r.reason = r.largest_square_half
                       ? "no square half covers the length-M language (largest half seen: " +
                             std::to_string(*r.largest_square_half) + ")"
                       : "no square of half length >= M in the prefix";
        return r;
    }

    // Claim 1: w concatenation of two palindromes
    const Word w_word(prefix.alphabet(), r.w);
    if (auto split = two_palindrome_decomposition(w_word))
        r.claim1 = std::make_pair(split->first.text(), split->second.text());

    // Claim 2: D(v) = D(u), with D(v) = D(ww) and a prefix cross-check
    r.d_u = pidx.defect();
    const Word ww(prefix.alphabet(), r.w + r.w);
    r.d_ww = PalIndex::build(ww).defect();
    const std::size_t wlen = r.w.size();
    const std::size_t v_len = std::max(6 * wlen, wlen + n_max + 2);
    const Word v_prefix(prefix.alphabet(), repeat_to(r.w, v_len));
    const PalIndex v_pal = PalIndex::build(v_prefix);
    r.d_v_prefix = v_pal.defect_at(6 * wlen);
    r.claim2 = r.d_ww == r.d_u && r.d_v_prefix == r.d_ww;

    // Claim 3: entrywise T equality up to n_max, plus the full periodic sum
    const std::size_t full_cap = wlen + 1;
    const std::size_t profile_cap = std::max(n_max + 1, full_cap + 1);
    const std::vector<std::size_t> c_v =
        factor_count_profile(v_prefix.text(), profile_cap);
    std::vector<std::size_t> p_v(profile_cap + 1, 0);
    for (std::size_t n = 0; n <= profile_cap; ++n) p_v[n] = v_pal.palindromic_complexity(n);

    const TSeries t_v = t_series_from_profiles(c_v, p_v, profile_cap - 1);
    r.claim3 = true;
    for (std::size_t n = 0; n <= n_max; ++n)
        if (t_v.values[n] != t_u.values[n]) {
            r.claim3 = false;
            r.claim3_first_mismatch = n;
            break;
        }

    r.t_v_sum = 0;
    for (std::size_t n = 0; n <= full_cap; ++n) r.t_v_sum += t_v.values[n];
    r.t_v_tail_zero = t_v.values[wlen] == 0 && t_v.values[full_cap] == 0;
    r.identity = 2 * r.d_ww == r.t_v_sum && r.t_v_tail_zero;
    return r;
}

Analysis analyze(const WordSource& source, const AnalysisOptions& options) {
    if (options.n_max + 1 > options.L)
        throw std::invalid_argument("analyze: need n_max + 1 <= L");
    const Word prefix = source.prefix(options.L);
    const FactorIndex fidx = FactorIndex::build(prefix, options.n_max);
    const PalIndex pidx = PalIndex::build(prefix);

    Analysis a;
    a.report = conjecture_report_from(source.id(), fidx, pidx, options.n_max,
                                      options.divergence_threshold);

    AuditCaps caps;
    caps.pal_cap = options.pal_cap.value_or(std::min<std::size_t>(options.n_max, 32));
    caps.factor_cap = options.factor_cap.value_or(std::min<std::size_t>(options.n_max, 48));
    caps.n_max = options.n_max;
    a.audit = equivalence_audit_from(fidx, pidx, caps);

    if (options.run_reduction) {
        ReductionOptions ropts;
        ropts.n_max = options.n_max;
        ropts.M = options.reduction_M;
        if (!ropts.M && a.audit.N && a.audit.H) ropts.M = std::max(*a.audit.N, *a.audit.H);
        if (ropts.M || (a.audit.N && a.audit.H)) {
            a.reduction = periodic_reduction(source, options.L, ropts);
        } else {
            ReductionResult skip;
            skip.reason = "audit bounds unavailable; reduction not attempted";
            a.reduction = skip;
        }
    }
    return a;
}

std::string analysis_to_json(const Analysis& a) {
    using json = nlohmann::ordered_json;
    const ConjectureReport& r = a.report;
    json j;
    j["word"] = r.word_id;
    j["L"] = r.L;
    j["n_max"] = r.n_max;
    j["defect_profile_summary"] = {
        {"defect", r.defect},
        {"last_defective_position",
         r.last_defective ? json(*r.last_defective) : json(nullptr)},
        {"flat_last_half", r.defect_flat_last_half},
    };
    j["t_values"] = r.t.values;
    j["t_sum"] = r.t_sum;
    json closure;
    closure["closed_up_to"] = r.closure.closed_up_to;
    if (r.closure.first_violation)
        closure["first_violation"] = {{"n", *r.closure.first_violation},
                                      {"missing_factor", r.closure.missing_factor}};
    else
        closure["first_violation"] = nullptr;
    j["closure"] = std::move(closure);
    j["K"] = a.audit.K ? json(*a.audit.K) : json(nullptr);
    j["H"] = a.audit.H ? json(*a.audit.H) : json(nullptr);
    j["N"] = a.audit.N ? json(*a.audit.N) : json(nullptr);
    j["convergence"] = {
        {"t_tail_zero_from",
         r.t.tail_zero_from ? json(*r.t.tail_zero_from) : json(nullptr)},
        {"converged", r.converged},
        {"note", "finite-run heuristic: zero T tail over the last quarter of the n "
                 "range and flat defect over the last half of the prefix"},
    };
    j["verdict"] = verdict_string(r);
    if (a.reduction && a.reduction->found) {
        const ReductionResult& red = *a.reduction;
        json jr;
        jr["w"] = red.w;
        jr["M"] = red.M;
        jr["claims"] = {red.claim1.has_value(), red.claim2, red.claim3};
        jr["identity"] = red.identity;
        j["reduction"] = std::move(jr);
    } else if (a.reduction) {
        j["reduction"] = {{"skipped", a.reduction->reason.empty()
                                          ? std::string("not applicable")
                                          : a.reduction->reason}};
    } else {
        j["reduction"] = nullptr;
    }
    return j.dump(2);
}

void write_series_csv(const FactorIndex& fidx, const PalIndex& pidx, std::size_t n_max,
                      std::ostream& out) {
    const TSeries t = t_series(fidx, pidx, n_max);
    out << "n,C,P,T\n";
    for (std::size_t n = 0; n <= n_max; ++n)
        out << n << ',' << fidx.factor_complexity(n) << ','
            << pidx.palindromic_complexity(n) << ',' << t.values[n] << '\n';
}

} // namespace paldef
