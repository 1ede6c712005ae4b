#pragma once

#include <string>
#include <vector>

#include "gsb/rewrite.hpp"

namespace gsb {

/// An overlap or embedding obstruction between two leading words, together
/// with the composition element it produces.
struct Composition {
    enum class Kind { Intersection, Inclusion };
    Kind kind;
    Word w;             // ambiguity word
    std::size_t left;   // rule index f
    std::size_t right;  // rule index g
    Word u;             // intersection: w = lead(f) u = v lead(g); inclusion: w = lead(f) = u lead(g) v
    Word v;
    Poly poly;          // f*u - v*g  resp.  f - u*g*v
};

std::string to_string(Composition::Kind k);

/// Complete, duplicate-free list of intersection and inclusion compositions
/// among the system's leading words (self-overlaps included), sorted by
/// ambiguity word under the active order, then rule indices.
std::vector<Composition> find_compositions(const RewriteSystem& sys);

/// Leading words of the rules, duplicates collapsed, sorted under the order.
std::vector<Word> leading_words(const std::vector<Poly>& rules, const OrderSpec& order, LeadMode mode);

struct CompositionCheck {
    Composition::Kind kind;
    Word w;
    std::size_t left, right;
    ReduceStatus status;
    std::size_t steps = 0;
    std::vector<ReductionStep> trace;
};

struct GSReport {
    enum class Verdict { IsGS, NotGS, UpToBound };
    LeadMode mode;
    Verdict verdict = Verdict::IsGS;
    unsigned long weight_bound = 0;  // min mode only
    std::vector<CompositionCheck> compositions;
    bool is_gs() const { return verdict == Verdict::IsGS; }
};

std::string to_string(GSReport::Verdict v);

/// Classical Groebner-Shirshov check: every composition must reduce to 0
/// under reduce_max against the full rule set.
GSReport check_gs_classical(const std::vector<Poly>& rules, const OrderSpec& order,
                            bool record_traces = false);

/// Series-side check via reduce_min: is-GS when every composition reaches
/// exact zero, not-GS on a surviving irreducible min term, up-to-bound
/// otherwise.
GSReport check_gs_series(const std::vector<Poly>& rules, const OrderSpec& order,
                         unsigned long weight_bound, bool record_traces = false);

struct CompletionResult {
    std::vector<Poly> rules;   // completed rule list (truncated below the cap)
    bool complete = true;      // false when max_rules was exceeded
    std::size_t compositions_processed = 0;
};

/// Buchberger-Shirshov completion under a length cap: models the ideal
/// (R) + I^cap, with the word-cap rules {w : |w| = cap} handled implicitly by
/// truncation plus their composition families. On normal exit every
/// composition reduces to 0 modulo the output plus the cap rules.
CompletionResult complete_classical(const std::vector<Poly>& rules, const OrderSpec& order,
                                    unsigned long degree_cap, std::size_t max_rules = 100000);

/// All words within the bound containing no element of `leading` as a factor.
std::vector<Word> normal_words(const std::vector<Word>& leading, const Alphabet& alphabet,
                               unsigned long bound, BoundMode mode);

/// Counts of normal words per exact length 0..bound.
std::vector<std::size_t> normal_word_counts(const std::vector<Word>& leading,
                                            const Alphabet& alphabet, unsigned long length_bound);

}  // namespace gsb
