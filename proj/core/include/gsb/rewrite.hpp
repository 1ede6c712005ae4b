#pragma once

#include <optional>
#include <vector>

#include "gsb/poly.hpp"

namespace gsb {

/// A set of monic rewrite rules with a fixed order and leading-term mode.
/// In max mode the order must be admissible; in min mode it must additionally
/// be an N-order (the series engine's termination argument needs it).
class RewriteSystem {
public:
    RewriteSystem(std::vector<Poly> rules, OrderSpec order, LeadMode mode);

    const std::vector<Poly>& rules() const { return rules_; }
    const OrderSpec& order() const { return order_; }
    LeadMode mode() const { return mode_; }
    const Context& context() const { return ctx_; }
    const Word& lead(std::size_t i) const { return leads_[i]; }
    const std::vector<Word>& leads() const { return leads_; }
    /// rule minus its leading term
    const Poly& tail(std::size_t i) const { return tails_[i]; }

    /// Leftmost position, then lowest rule index.
    std::optional<std::pair<std::size_t, std::size_t>> find_divisor(const Word& w) const;

    /// Adds an already monic rule (used by completion).
    void push_rule(Poly rule);

private:
    Context ctx_;
    OrderSpec order_;
    LeadMode mode_;
    std::vector<Poly> rules_;
    std::vector<Word> leads_;
    std::vector<Poly> tails_;
    std::map<Word, std::size_t, WordKeyLess> lead_index_;  // lead word -> lowest rule index
    std::vector<std::size_t> lead_lengths_;                // distinct lead lengths, ascending
};

enum class ReduceStatus { ReducedToZero, NormalForm, IrreducibleMinTermBelowBound, TruncatedAtBound };

std::string to_string(ReduceStatus s);

struct ReductionStep {
    std::size_t rule;
    std::size_t position;
    Word left;
    Word right;
    Scalar coeff;
};

struct ReductionResult {
    Poly remainder;
    ReduceStatus status;
    std::vector<ReductionStep> trace;  // populated when recording was requested
    bool recorded = false;
    std::size_t steps = 0;

    /// Re-expands remainder + sum coeff * left * rule * right and compares
    /// with the given input. Only meaningful for recorded, uncapped runs.
    bool verify_cofactors(const Poly& input, const RewriteSystem& sys) const;
};

/// Classical normal form: repeatedly rewrites the order-greatest reducible
/// term. Terminates for every input (deg-lex and theta-lex are N-orders).
/// When length_cap is set, terms of length >= cap are deleted throughout;
/// this models reduction by the word-cap rules {w : |w| = cap}.
ReductionResult reduce_max(const Poly& f, const RewriteSystem& sys, bool record = false,
                           std::optional<unsigned long> length_cap = std::nullopt);

/// Series reduction: repeatedly eliminates the order-least term while its
/// theta-weight stays below weight_bound. An irreducible surviving min term
/// is a definitive failure; reaching the bound is inconclusive.
ReductionResult reduce_min(const Poly& f, const RewriteSystem& sys, unsigned long weight_bound,
                           bool record = false);

}  // namespace gsb
