#include "gsb/rewrite.hpp"

#include <cassert>
#include <stdexcept>

namespace gsb {

std::string to_string(ReduceStatus s) {
    switch (s) {
        case ReduceStatus::ReducedToZero: return "reduced-to-zero";
        case ReduceStatus::NormalForm: return "normal-form";
        case ReduceStatus::IrreducibleMinTermBelowBound: return "irreducible-min-term";
        case ReduceStatus::TruncatedAtBound: return "truncated-at-bound";
    }
    return "?";
}

RewriteSystem::RewriteSystem(std::vector<Poly> rules, OrderSpec order, LeadMode mode)
    : order_(std::move(order)), mode_(mode) {
    if (!order_.admissible_by_construction())
        throw std::invalid_argument("rewrite systems require an admissible order (lex is not)");
    if (mode_ == LeadMode::Min && !order_.is_n_order())
        throw std::invalid_argument("min-mode rewriting requires an admissible N-order");
    ctx_ = rules.empty() ? Context{order_.alphabet(), Field::rationals()} : rules.front().context();
    if (*ctx_.alphabet != *order_.alphabet())
        throw std::invalid_argument("rules and order use different alphabets");
    for (auto& r : rules) {
        if (r.is_zero()) throw std::invalid_argument("zero polynomial cannot be a rewrite rule");
        push_rule(r.make_monic(order_, mode_));
    }
}

void RewriteSystem::push_rule(Poly rule) {
    if (rules_.empty()) {
        if (*rule.context().alphabet != *order_.alphabet())
            throw std::invalid_argument("rule and order use different alphabets");
        ctx_ = rule.context();
    } else if (rule.context() != ctx_) {
        throw std::invalid_argument("rule over a different context");
    }
    auto [w, c] = rule.lead_term(order_, mode_);
    assert(c == 1);
    if (w.is_one()) throw std::invalid_argument("rule with leading word 1 (unit in the ideal)");
    Poly tail = rule - Poly(ctx_, w, c);
    std::size_t idx = rules_.size();
    lead_index_.emplace(w, idx);  // keeps the lowest index on duplicates
    if (std::find(lead_lengths_.begin(), lead_lengths_.end(), w.length()) == lead_lengths_.end()) {
        lead_lengths_.push_back(w.length());
        std::sort(lead_lengths_.begin(), lead_lengths_.end());
    }
    leads_.push_back(w);
    tails_.push_back(std::move(tail));
    rules_.push_back(std::move(rule));
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_divisor(const Word& w) const {
    // leftmost position, then lowest rule index among the rules matching there
    for (std::size_t pos = 0; pos < w.length(); ++pos) {
        std::optional<std::size_t> best;
        for (std::size_t len : lead_lengths_) {
            if (pos + len > w.length()) break;
            auto it = lead_index_.find(w.subword(pos, len));
            if (it != lead_index_.end() && (!best || it->second < *best)) best = it->second;
        }
        if (best) return std::make_pair(*best, pos);
    }
    return std::nullopt;
}

bool ReductionResult::verify_cofactors(const Poly& input, const RewriteSystem& sys) const {
    Poly acc = remainder;
    for (const auto& st : trace) {
        Poly mult = Poly(acc.context(), st.left, st.coeff) * sys.rules()[st.rule] *
                    Poly::monomial(acc.context(), st.right);
        acc = acc + mult;
    }
    return acc == input;
}

ReductionResult reduce_max(const Poly& f, const RewriteSystem& sys, bool record,
                           std::optional<unsigned long> length_cap) {
    if (!sys.rules().empty() && f.context() != sys.context())
        throw std::invalid_argument("polynomial and rewrite system contexts differ");
    if (sys.mode() != LeadMode::Max)
        throw std::invalid_argument("reduce_max requires a max-mode system");
    ReductionResult res{length_cap ? f.truncated(*length_cap, BoundMode::ByLength) : f,
                        ReduceStatus::NormalForm, {}, record};
    while (!res.remainder.is_zero()) {
        // order-greatest reducible term
        std::optional<Word> pick;
        Scalar pick_coeff;
        std::pair<std::size_t, std::size_t> pick_div{};
        for (const auto& [w, c] : res.remainder.terms()) {
            auto div = sys.find_divisor(w);
            if (!div) continue;
            if (!pick || sys.order().compare(w, *pick) > 0) {
                pick = w;
                pick_coeff = c;
                pick_div = *div;
            }
        }
        if (!pick) break;
        auto [ri, pos] = pick_div;
        Word left = pick->prefix(pos);
        Word right = pick->suffix(pick->length() - pos - sys.lead(ri).length());
        Poly mult = Poly(f.context(), left, pick_coeff) * sys.rules()[ri] *
                    Poly::monomial(f.context(), right);
        if (length_cap) mult = mult.truncated(*length_cap, BoundMode::ByLength);
        res.remainder = res.remainder - mult;
        ++res.steps;
        if (record) res.trace.push_back({ri, pos, left, right, pick_coeff});
    }
    if (res.remainder.is_zero()) res.status = ReduceStatus::ReducedToZero;
    return res;
}

ReductionResult reduce_min(const Poly& f, const RewriteSystem& sys, unsigned long weight_bound,
                           bool record) {
    if (sys.mode() != LeadMode::Min)
        throw std::invalid_argument("reduce_min requires a min-mode system");
    if (!sys.rules().empty() && f.context() != sys.context())
        throw std::invalid_argument("polynomial and rewrite system contexts differ");
    if (weight_bound < 1) throw std::invalid_argument("weight bound must be >= 1");
    if (weight_bound > 1000) throw std::runtime_error("weight bound exceeds safety cap");
    ReductionResult res{f, ReduceStatus::TruncatedAtBound, {}, record};
    std::optional<Word> prev_min;
    while (!res.remainder.is_zero()) {
        auto [w, c] = res.remainder.min_term(sys.order());
        // min term strictly increases across steps
        assert(!prev_min || sys.order().compare(w, *prev_min) > 0);
        prev_min = w;
        if (sys.order().theta(w) >= weight_bound) {
            res.status = ReduceStatus::TruncatedAtBound;
            return res;
        }
        auto div = sys.find_divisor(w);
        if (!div) {
            res.status = ReduceStatus::IrreducibleMinTermBelowBound;
            return res;
        }
        auto [ri, pos] = *div;
        Word left = w.prefix(pos);
        Word right = w.suffix(w.length() - pos - sys.lead(ri).length());
        Poly mult = Poly(f.context(), left, c) * sys.rules()[ri] *
                    Poly::monomial(f.context(), right);
        res.remainder = res.remainder - mult;
        ++res.steps;
        if (record) res.trace.push_back({ri, pos, left, right, c});
    }
    res.status = ReduceStatus::ReducedToZero;
    return res;
}

}  // namespace gsb
