#include "gsb/gsbases.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace gsb {

std::string to_string(Composition::Kind k) {
    return k == Composition::Kind::Intersection ? "intersection" : "inclusion";
}

std::string to_string(GSReport::Verdict v) {
    switch (v) {
        case GSReport::Verdict::IsGS: return "is-GS";
        case GSReport::Verdict::NotGS: return "not-GS";
        case GSReport::Verdict::UpToBound: return "GS-up-to-bound";
    }
    return "?";
}

namespace {

bool words_equal_range(const Word& a, std::size_t apos, const Word& b, std::size_t bpos,
                       std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (a.at(apos + i) != b.at(bpos + i)) return false;
    return true;
}

}  // namespace

std::vector<Word> leading_words(const std::vector<Poly>& rules, const OrderSpec& order,
                                LeadMode mode) {
    std::vector<Word> out;
    for (const auto& r : rules) {
        if (r.is_zero()) throw std::invalid_argument("zero rule has no leading word");
        Word w = r.lead_term(order, mode).first;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return order.compare(a, b) < 0; });
    return out;
}

std::vector<Composition> find_compositions(const RewriteSystem& sys) {
    const auto& rules = sys.rules();
    const Context& ctx = sys.context();
    std::vector<Composition> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& wi = sys.lead(i);
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& wj = sys.lead(j);
            // intersection: proper suffix of lead(i) equals proper prefix of lead(j)
            for (std::size_t k = 1; k < std::min(wi.length(), wj.length()); ++k) {
                if (!words_equal_range(wi, wi.length() - k, wj, 0, k)) continue;
                Word u = wj.suffix(wj.length() - k);
                Word v = wi.prefix(wi.length() - k);
                Word w = wi * u;
                Poly poly = rules[i] * Poly::monomial(ctx, u) - Poly::monomial(ctx, v) * rules[j];
                out.push_back({Composition::Kind::Intersection, w, i, j, u, v, std::move(poly)});
            }
            // inclusion: lead(j) occurs inside lead(i); degenerate (u,v)=(1,1)
            // only between distinct rules (duplicate rules are rejected earlier)
            if (i == j) continue;
            if (wj.length() > wi.length()) continue;
            for (std::size_t pos = 0; pos + wj.length() <= wi.length(); ++pos) {
                if (!words_equal_range(wi, pos, wj, 0, wj.length())) continue;
                Word u = wi.prefix(pos);
                Word v = wi.suffix(wi.length() - pos - wj.length());
                Poly poly = rules[i] - Poly::monomial(ctx, u) * rules[j] * Poly::monomial(ctx, v);
                out.push_back({Composition::Kind::Inclusion, wi, i, j, u, v, std::move(poly)});
            }
        }
    }
    // min-mode sanity: a nonzero composition's min term lies strictly above w
    if (sys.mode() == LeadMode::Min) {
        for (const auto& c : out) {
            if (c.poly.is_zero()) continue;
            if (sys.order().compare(c.poly.min_term(sys.order()).first, c.w) <= 0)
                throw std::logic_error("composition min term does not exceed its ambiguity word");
        }
    }
    std::stable_sort(out.begin(), out.end(), [&](const Composition& a, const Composition& b) {
        int c = sys.order().compare(a.w, b.w);
        if (c != 0) return c < 0;
        if (a.left != b.left) return a.left < b.left;
        if (a.right != b.right) return a.right < b.right;
        return WordKeyLess{}(a.u, b.u);
    });
    return out;
}

static void reject_duplicate_rules(const std::vector<Poly>& rules) {
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = i + 1; j < rules.size(); ++j)
            if (rules[i] == rules[j]) throw std::invalid_argument("duplicate rule in system");
}

GSReport check_gs_classical(const std::vector<Poly>& rules, const OrderSpec& order,
                            bool record_traces) {
    reject_duplicate_rules(rules);
    RewriteSystem sys(rules, order, LeadMode::Max);
    GSReport rep;
    rep.mode = LeadMode::Max;
    for (const auto& comp : find_compositions(sys)) {
        auto red = reduce_max(comp.poly, sys, record_traces);
        CompositionCheck chk{comp.kind, comp.w, comp.left, comp.right, red.status,
                             red.steps, record_traces ? red.trace : std::vector<ReductionStep>{}};
        if (red.status != ReduceStatus::ReducedToZero) rep.verdict = GSReport::Verdict::NotGS;
        rep.compositions.push_back(std::move(chk));
    }
    return rep;
}

GSReport check_gs_series(const std::vector<Poly>& rules, const OrderSpec& order,
                         unsigned long weight_bound, bool record_traces) {
    reject_duplicate_rules(rules);
    RewriteSystem sys(rules, order, LeadMode::Min);
    GSReport rep;
    rep.mode = LeadMode::Min;
    rep.weight_bound = weight_bound;
    bool any_bound = false;
    for (const auto& comp : find_compositions(sys)) {
        auto red = reduce_min(comp.poly, sys, weight_bound, record_traces);
        CompositionCheck chk{comp.kind, comp.w, comp.left, comp.right, red.status,
                             red.steps, record_traces ? red.trace : std::vector<ReductionStep>{}};
        if (red.status == ReduceStatus::IrreducibleMinTermBelowBound)
            rep.verdict = GSReport::Verdict::NotGS;
        else if (red.status == ReduceStatus::TruncatedAtBound)
            any_bound = true;
        rep.compositions.push_back(std::move(chk));
    }
    if (rep.verdict == GSReport::Verdict::IsGS && any_bound)
        rep.verdict = GSReport::Verdict::UpToBound;
    return rep;
}

namespace {

/// Composition families between a rule and the implicit word-cap rules
/// {w : |w| = cap}. Each family member is (a multiple of) the rule tail in a
/// context; members whose every term reaches the cap truncate to zero and
/// are skipped wholesale.
void for_each_cap_composition(const RewriteSystem& sys, std::size_t rule_idx, unsigned long cap,
                              const std::function<void(Poly)>& emit) {
    // copies: emit may adjoin rules and reallocate the system's storage
    const Word lead = sys.lead(rule_idx);
    const Poly tail = sys.tail(rule_idx);
    if (tail.is_zero()) return;
    const Context& ctx = sys.context();
    const Alphabet& a = *ctx.alphabet;
    std::size_t tmin = tail.min_term_length();

    auto all_words = [&](std::size_t len) {
        std::vector<Word> ws{Word::one()};
        for (std::size_t k = 0; k < len; ++k) {
            std::vector<Word> nxt;
            nxt.reserve(ws.size() * a.size());
            for (const auto& w : ws)
                for (std::size_t l = 0; l < a.size(); ++l) nxt.push_back(w * Word::single(l));
            ws = std::move(nxt);
        }
        return ws;
    };

    // intersection, cap word on the right: tail(f) * u, |u| = cap - |s| for a
    // proper nonempty suffix s of lead(f)
    for (std::size_t slen = 1; slen < lead.length(); ++slen) {
        if (tmin >= slen) continue;  // every term would reach the cap
        for (const auto& u : all_words(cap - slen)) emit(tail * Poly::monomial(ctx, u));
    }
    // intersection, cap word on the left: v * tail(f)
    for (std::size_t plen = 1; plen < lead.length(); ++plen) {
        if (tmin >= plen) continue;
        for (const auto& v : all_words(cap - plen)) emit(Poly::monomial(ctx, v) * tail);
    }
    // inclusion: lead(f) inside a cap word: u * tail(f) * v, |u|+|v| = cap - |lead|
    if (cap > lead.length() && tmin < lead.length()) {
        std::size_t total = cap - lead.length();
        for (std::size_t ulen = 0; ulen <= total; ++ulen) {
            for (const auto& u : all_words(ulen))
                for (const auto& v : all_words(total - ulen))
                    emit(Poly::monomial(ctx, u) * tail * Poly::monomial(ctx, v));
        }
    }
}

}  // namespace

CompletionResult complete_classical(const std::vector<Poly>& rules, const OrderSpec& order,
                                    unsigned long degree_cap, std::size_t max_rules) {
    if (degree_cap < 1) throw std::invalid_argument("degree cap must be >= 1");
    CompletionResult res;
    RewriteSystem sys({}, order, LeadMode::Max);

    auto adjoin = [&](const Poly& candidate) {
        Poly red = reduce_max(candidate, sys, false, degree_cap).remainder;
        if (red.is_zero()) return false;
        if (sys.rules().size() >= max_rules) {
            res.complete = false;
            return false;
        }
        sys.push_rule(red.make_monic(order, LeadMode::Max));
        return true;
    };

    for (const auto& r : rules) {
        if (r.is_zero()) throw std::invalid_argument("zero polynomial cannot be a relation");
        adjoin(r);
        if (!res.complete) { res.rules = sys.rules(); return res; }
    }

    // pending: rule indices whose composition families are unprocessed
    std::deque<std::size_t> pending;
    for (std::size_t i = 0; i < sys.rules().size(); ++i) pending.push_back(i);
    std::set<std::pair<std::size_t, std::size_t>> done_pairs;

    while (!pending.empty() && res.complete) {
        std::size_t k = pending.front();
        pending.pop_front();
        std::size_t before = sys.rules().size();

        // rule-rule compositions of k against everything present
        for (std::size_t j = 0; j < before && res.complete; ++j) {
            std::size_t lo = std::min(k, j), hi = std::max(k, j);
            if (sys.tail(lo).is_zero() && sys.tail(hi).is_zero()) continue;  // monomials: composition = 0
            if (!done_pairs.insert({lo, hi}).second) continue;
            if (lo == hi) {
                RewriteSystem self_sys({sys.rules()[lo]}, order, LeadMode::Max);
                for (const auto& comp : find_compositions(self_sys)) {
                    ++res.compositions_processed;
                    adjoin(comp.poly);
                    if (!res.complete) break;
                }
            } else {
                RewriteSystem pair_sys({sys.rules()[lo], sys.rules()[hi]}, order, LeadMode::Max);
                for (const auto& comp : find_compositions(pair_sys)) {
                    if (comp.left == comp.right) continue;  // self-overlaps handled per rule
                    ++res.compositions_processed;
                    adjoin(comp.poly);
                    if (!res.complete) break;
                }
            }
        }
        // compositions of k with the implicit cap rules
        if (res.complete) {
            for_each_cap_composition(sys, k, degree_cap, [&](Poly p) {
                if (!res.complete) return;
                ++res.compositions_processed;
                adjoin(p);
            });
        }
        for (std::size_t n = before; n < sys.rules().size(); ++n) pending.push_back(n);
    }
    res.rules = sys.rules();
    return res;
}

std::vector<Word> normal_words(const std::vector<Word>& leading, const Alphabet& alphabet,
                               unsigned long bound, BoundMode mode) {
    std::vector<Word> out;
    for (const auto& w : enumerate_words(alphabet, bound, mode)) {
        bool bad = false;
        for (const auto& l : leading)
            if (has_factor(w, l)) { bad = true; break; }
        if (!bad) out.push_back(w);
    }
    return out;
}

std::vector<std::size_t> normal_word_counts(const std::vector<Word>& leading,
                                            const Alphabet& alphabet, unsigned long length_bound) {
    std::vector<std::size_t> counts(length_bound + 1, 0);
    for (const auto& w : normal_words(leading, alphabet, length_bound, BoundMode::ByLength))
        ++counts[w.length()];
    return counts;
}

}  // namespace gsb
