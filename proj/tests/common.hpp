#pragma once

#include <memory>
#include <vector>

#include "gsb/linalg.hpp"
#include "gsb/poly.hpp"

namespace gsbtest {

using namespace gsb;

inline Context xy_ctx() {
    auto a = std::make_shared<Alphabet>(std::vector<Letter>{{"x", 1}, {"y", 1}});
    return Context{a, Field::rationals()};
}

// four generators x1, x2 (weight 1) and y1, y2 (weight 3)
inline Context main_ctx() {
    auto a = std::make_shared<Alphabet>(
        std::vector<Letter>{{"x1", 1}, {"x2", 1}, {"y1", 3}, {"y2", 3}});
    return Context{a, Field::rationals()};
}

inline Word w(std::initializer_list<std::size_t> ls) {
    Word r;
    for (auto l : ls) r = r * Word::single(l);
    return r;
}

inline Poly mono(const Context& ctx, std::initializer_list<std::size_t> ls, long long c = 1) {
    Poly p(ctx);
    p.add_term(w(ls), Scalar(c));
    return p;
}

// r1 = x1 x2 + y1^2 - y1, r2 = x2 x1 + y2^2 - y2,
// r3 = x1 y2 - y1 x1,      r4 = x2 y1 - y2 x2
inline std::vector<Poly> main_relations(const Context& ctx) {
    Poly r1 = mono(ctx, {0, 1}) + mono(ctx, {2, 2}) - mono(ctx, {2});
    Poly r2 = mono(ctx, {1, 0}) + mono(ctx, {3, 3}) - mono(ctx, {3});
    Poly r3 = mono(ctx, {0, 3}) - mono(ctx, {2, 0});
    Poly r4 = mono(ctx, {1, 2}) - mono(ctx, {3, 1});
    return {r1, r2, r3, r4};
}

inline OrderSpec main_order_max(const Context& ctx) {
    return OrderSpec::deg_lex(ctx.alphabet, {0, 1, 2, 3});
}

inline OrderSpec main_order_min(const Context& ctx) {
    return OrderSpec::theta_lex(ctx.alphabet, {2, 3, 0, 1}, {1, 1, 3, 3});
}

// Independent check for quotient dimensions: rank of the truncations of
// u*r*v over every cofactor pair that can contribute below the cap, measured
// against the words of length < n. Pure linear algebra, no rewriting.
inline std::size_t oracle_quotient_dim(const Context& ctx, const std::vector<Poly>& rels,
                                       unsigned long n) {
    auto words = enumerate_words(*ctx.alphabet, n - 1, BoundMode::ByLength);
    RowSpace rs(ctx.field);
    for (const auto& r : rels) {
        std::size_t ml = r.min_term_length();
        if (ml >= n) continue;
        std::size_t budget = n - 1 - ml;
        for (const auto& u : words) {
            if (u.length() > budget) continue;
            for (const auto& v : words) {
                if (u.length() + v.length() > budget) continue;
                Poly p = Poly::monomial(ctx, u) * r * Poly::monomial(ctx, v);
                rs.insert(p.truncated(n, BoundMode::ByLength));
            }
        }
    }
    return words.size() - rs.rank();
}

}  // namespace gsbtest
