#include "gsb/quotients.hpp"

#include <stdexcept>

namespace gsb {

Presentation::Presentation(Context c, std::vector<Poly> rels, OrderSpec omax, OrderSpec omin,
                           std::string nm)
    : ctx(std::move(c)),
      relations(std::move(rels)),
      order_max(std::move(omax)),
      order_min(std::move(omin)),
      name(std::move(nm)) {
    if (*order_max.alphabet() != *ctx.alphabet || *order_min.alphabet() != *ctx.alphabet)
        throw std::invalid_argument("presentation orders use a different alphabet");
    for (const auto& r : relations) {
        if (r.context() != ctx) throw std::invalid_argument("relation over a different context");
        if (r.is_zero()) throw std::invalid_argument("zero polynomial cannot be a relation");
        if (r.augmentation() != 0)
            throw std::invalid_argument("relation has a nonzero constant term");
    }
}

Poly TruncatedQuotient::normal_form(const Poly& f) const {
    return reduce_max(f, sys_, false, n_).remainder;
}

TruncatedQuotient build_truncated_quotient(const Presentation& p, unsigned long n,
                                           std::size_t max_rules) {
    if (n < 1) throw std::invalid_argument("truncation degree must be >= 1");
    CompletionResult comp = complete_classical(p.relations, p.order_max, n, max_rules);
    if (!comp.complete) throw std::runtime_error("completion exceeded the rule cap");
    RewriteSystem sys(comp.rules, p.order_max, LeadMode::Max);
    std::vector<Word> basis =
        normal_words(sys.leads(), *p.ctx.alphabet, n - 1, BoundMode::ByLength);
    return TruncatedQuotient(p, n, std::move(sys), std::move(basis));
}

std::vector<std::size_t> filtration_dims(const TruncatedQuotient& q) {
    const unsigned long n = q.n();
    const Alphabet& a = *q.presentation().ctx.alphabet;
    auto words = enumerate_words(a, n - 1, BoundMode::ByLength);
    // accumulate spans of {NF(w) : |w| >= k} from the top length down;
    // words of length >= n vanish in the quotient, so length n-1 suffices
    RowSpace rs(q.presentation().ctx.field);
    std::vector<std::size_t> cum(n + 1, 0);
    for (unsigned long k = n; k-- > 0;) {
        for (const auto& w : words) {
            if (w.length() != k) continue;
            rs.insert(q.normal_form(Poly::monomial(q.presentation().ctx, w)));
        }
        cum[k] = rs.rank();
    }
    std::vector<std::size_t> gr(n);
    for (unsigned long k = 0; k < n; ++k) gr[k] = cum[k] - cum[k + 1];
    return gr;
}

ParaequivalenceResult paraequivalence_check(const Presentation& p, std::size_t free_rank,
                                            unsigned long n, std::size_t max_rules) {
    TruncatedQuotient q = build_truncated_quotient(p, n, max_rules);
    ParaequivalenceResult res;
    res.gr_dims = filtration_dims(q);
    res.expected.resize(n);
    std::size_t pow = 1;
    for (unsigned long k = 0; k < n; ++k) {
        res.expected[k] = pow;
        pow *= free_rank;
    }
    res.matches = res.gr_dims == res.expected;
    return res;
}

std::size_t hopf_h2_graded(const Presentation& p, unsigned long d) {
    if (d < 1) throw std::invalid_argument("weight must be >= 1");
    const Alphabet& a = *p.ctx.alphabet;
    for (const auto& r : p.relations) {
        unsigned long w0 = r.terms().begin()->first.weight(a);
        for (const auto& [w, c] : r.terms())
            if (w.weight(a) != w0)
                throw std::invalid_argument("relation is not weight-homogeneous");
    }
    // numerator space U: weight-d slice of span{u r v}; its intersection with
    // I^2 drops by the rank of the projection onto the length-<=1 coordinates
    RowSpace full(p.ctx.field);
    RowSpace proj(p.ctx.field);
    RowSpace denom(p.ctx.field);
    for (const auto& r : p.relations) {
        unsigned long rw = r.terms().begin()->first.weight(a);
        if (rw > d) continue;
        auto sides = enumerate_words(a, d - rw, BoundMode::ByWeight);
        for (const auto& u : sides) {
            for (const auto& v : sides) {
                if (u.weight(a) + rw + v.weight(a) != d) continue;
                Poly urv = Poly::monomial(p.ctx, u) * r * Poly::monomial(p.ctx, v);
                full.insert(urv);
                Poly lin(p.ctx);
                for (const auto& [w, c] : urv.terms())
                    if (w.length() <= 1) lin.add_term(w, c);
                proj.insert(lin);
                if (!u.is_one() || !v.is_one()) denom.insert(std::move(urv));
            }
        }
    }
    return full.rank() - proj.rank() - denom.rank();
}

std::size_t gr1_dependence(const Presentation& p, const std::vector<Poly>& elements) {
    TruncatedQuotient q = build_truncated_quotient(p, 2);
    RowSpace rs(p.ctx.field);
    for (const auto& e : elements) {
        if (e.augmentation() != 0)
            throw std::invalid_argument("element lies outside the augmentation ideal");
        rs.insert(q.normal_form(e));
    }
    return rs.rank();
}

}  // namespace gsb
