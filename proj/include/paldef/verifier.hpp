#ifndef PALDEF_VERIFIER_HPP
#define PALDEF_VERIFIER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "paldef/t_series.hpp"
#include "paldef/word_source.hpp"

namespace paldef {

struct ClosureStatus {
    /// Largest m such that the language is reversal-closed at every length <= m.
    std::size_t closed_up_to = 0;
    std::optional<std::size_t> first_violation;
    std::string missing_factor; // reversal absent at the first violation
};

enum class Verdict { equality, gap, divergent_both, inapplicable };

/// Truncated check of 2 D(u) = sum T(n). The "converged" flag is a finite-run
/// heuristic: the T tail must be zero over at least the last quarter of the
/// n range and the defect profile flat over the last half of the prefix.
struct ConjectureReport {
    std::string word_id;
    std::size_t L = 0;
    std::size_t n_max = 0;

    long long defect = 0;
    std::optional<std::size_t> last_defective;
    bool defect_flat_last_half = false;

    TSeries t;
    long long t_sum = 0;
    bool t_tail_ok = false;

    ClosureStatus closure;
    bool converged = false;

    Verdict verdict = Verdict::inapplicable;
    long long gap = 0;      // t_sum - 2 * defect, for Verdict::gap
    std::string reason;     // for Verdict::inapplicable
    long long divergence_threshold = 10;
};

std::string verdict_string(const ConjectureReport& r);

ConjectureReport conjecture_report(const WordSource& source, std::size_t L,
                                   std::size_t n_max, long long divergence_threshold = 10);
ConjectureReport conjecture_report_from(std::string word_id, const FactorIndex& fidx,
                                        const PalIndex& pidx, std::size_t n_max,
                                        long long divergence_threshold = 10);

struct AuditCaps {
    std::size_t pal_cap = 32;    // palindrome lengths scanned for K
    std::size_t factor_cap = 32; // factor lengths scanned for H
    std::size_t n_max = 32;      // T-series range for N
};

/// Empirical bounds behind the finite-defect equivalences:
///   K: every palindrome of length in [K, pal_cap] has palindromic complete
///      return words;
///   H: every factor of length in [H, factor_cap] has unioccurrent longest
///      palindromic suffix;
///   N: T(n) = 0 for N <= n <= n_max.
/// A bound is absent when failures reach its cap.
struct EquivalenceAudit {
    AuditCaps caps;
    bool defect_flat = false;
    std::optional<std::size_t> K, H, N;
    bool consistent = true;
    std::vector<std::string> notes;
};

EquivalenceAudit equivalence_audit(const WordSource& source, std::size_t L, AuditCaps caps);
EquivalenceAudit equivalence_audit_from(const FactorIndex& fidx, const PalIndex& pidx,
                                        AuditCaps caps);

/// Some split w = pq with both halves palindromes (empty allowed), smallest
/// |p| first; absent when no split exists.
std::optional<std::pair<Word, Word>> two_palindrome_decomposition(const Word& w);

/// Defect of the periodic word w^omega. Finite exactly when the primitive
/// root of w splits into two palindromes, in which case D(w^omega) = D(ww)
/// computed on the root.
struct PeriodicDefect {
    bool finite = false;
    long long value = 0;
    std::string root;            // primitive root actually used
    bool reduced_to_root = false; // input was a proper power
};

PeriodicDefect periodic_defect(const Word& w);

struct ReductionOptions {
    std::size_t n_max = 60;          // range for the entrywise T comparison
    std::optional<std::size_t> M;    // override for max{N, H}
    long long divergence_threshold = 10;
};

/// Replace the word by v = w^omega where ww is a factor and w covers every
/// length-M factor, then verify: (1) w is a concatenation of two palindromes,
/// (2) D(v) = D(u-prefix), (3) T_v(n) = T_u(n) entrywise, and the periodic
/// identity 2 D(v) = sum T_v(n).
struct ReductionResult {
    bool applicable = false;
    std::string reason;

    std::size_t M = 0;
    std::optional<std::size_t> N_bound, H_bound;

    bool found = false;
    std::string w;
    std::size_t w_position = 0;
    std::optional<std::size_t> largest_square_half;

    std::optional<std::pair<std::string, std::string>> claim1;
    long long d_u = 0;
    long long d_ww = 0;
    long long d_v_prefix = 0; // cross-check at prefix length 6|w|
    bool claim2 = false;
    bool claim3 = false;
    std::optional<std::size_t> claim3_first_mismatch;

    long long t_v_sum = 0;   // sum over n <= |w| + 1
    bool t_v_tail_zero = false;
    bool identity = false;   // 2 * d_ww == t_v_sum
};

ReductionResult periodic_reduction(const WordSource& source, std::size_t L,
                                   const ReductionOptions& options = {});

struct AnalysisOptions {
    std::size_t L = 1000;
    std::size_t n_max = 100;
    std::optional<std::size_t> pal_cap;    // default min(n_max, 32)
    std::optional<std::size_t> factor_cap; // default min(n_max, 48)
    long long divergence_threshold = 10;
    bool run_reduction = true;
    std::optional<std::size_t> reduction_M;
};

struct Analysis {
    ConjectureReport report;
    EquivalenceAudit audit;
    std::optional<ReductionResult> reduction;
};

/// Full pipeline over one prefix: report + audit + (when applicable) reduction.
Analysis analyze(const WordSource& source, const AnalysisOptions& options);

std::string analysis_to_json(const Analysis& a);

/// Rows n,C,P,T for n = 0..n_max.
void write_series_csv(const FactorIndex& fidx, const PalIndex& pidx, std::size_t n_max,
                      std::ostream& out);

} // namespace paldef

#endif
