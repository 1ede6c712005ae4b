#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "gsb/poly.hpp"

using namespace gsb;
using namespace gsbtest;

namespace {

Word random_word(std::mt19937& rng, std::size_t alphabet_size, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> let(0, alphabet_size - 1);
    Word w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w = w * Word::single(let(rng));
    return w;
}

Poly random_poly(std::mt19937& rng, const Context& ctx, std::size_t max_terms,
                 std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> nt(1, max_terms);
    std::uniform_int_distribution<int> cf(-5, 5);
    Poly p(ctx);
    std::size_t n = nt(rng);
    for (std::size_t i = 0; i < n; ++i) {
        int c = cf(rng);
        if (c == 0) c = 1;
        p.add_term(random_word(rng, ctx.alphabet->size(), max_len), Scalar(c));
    }
    return p;
}

}  // namespace

TEST_CASE("field arithmetic") {
    Field q = Field::rationals();
    CHECK(q.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
    CHECK(q.inv(Scalar(-3, 7)) == Scalar(-7, 3));
    CHECK_THROWS(q.inv(Scalar(0)));
    CHECK(Field::to_string(Scalar(5, 6)) == "5/6");
    CHECK(Field::to_string(Scalar(-4)) == "-4");

    Field f5 = Field::prime(5);
    CHECK(f5.add(Scalar(3), Scalar(4)) == Scalar(2));
    CHECK(f5.mul(Scalar(3), Scalar(4)) == Scalar(2));
    CHECK(f5.inv(Scalar(3)) == Scalar(2));
    CHECK(f5.normalize(Scalar(-1)) == Scalar(4));
    CHECK(f5.parse("7") == Scalar(2));
    CHECK_THROWS(Field::prime(6));
}

TEST_CASE("polynomial arithmetic") {
    Context ctx = xy_ctx();
    Poly x = mono(ctx, {0}), y = mono(ctx, {1});
    Poly f = x * y - y * x;
    CHECK(f.term_count() == 2);
    CHECK(f.coeff(w({0, 1})) == Scalar(1));
    CHECK(f.coeff(w({1, 0})) == Scalar(-1));
    CHECK(f.coeff(w({0, 0})) == Scalar(0));
    CHECK((f + (-f)).is_zero());
    CHECK(f - f == Poly::zero(ctx));
    CHECK(f.scaled(Scalar(0)).is_zero());
    // cancellation inside a product: (x+y)(x-y) = xx - xy + yx - yy
    Poly g = (x + y) * (x - y);
    CHECK(g.term_count() == 4);
    CHECK(g.coeff(w({0, 1})) == Scalar(-1));
    // one is the multiplicative identity
    Poly one = Poly::monomial(ctx, Word::one());
    CHECK(one * f == f);
    CHECK(f * one == f);
    CHECK(f.augmentation() == Scalar(0));
    CHECK((f + one).augmentation() == Scalar(1));
    CHECK(f.min_term_length() == 2);
    CHECK(Poly::zero(ctx).min_term_length() == 0);
}

TEST_CASE("prime-field coefficients collapse") {
    auto a = std::make_shared<Alphabet>(std::vector<Letter>{{"x", 1}});
    Context ctx{a, Field::prime(3)};
    Poly x = Poly::monomial(ctx, Word::single(0));
    Poly sum = x + x + x;
    CHECK(sum.is_zero());
    Poly p(ctx);
    p.add_term(Word::single(0), Scalar(5));
    CHECK(p.coeff(Word::single(0)) == Scalar(2));
}

TEST_CASE("max and min terms of the headline relations") {
    Context ctx = main_ctx();
    auto rels = main_relations(ctx);
    OrderSpec omax = main_order_max(ctx), omin = main_order_min(ctx);
    // classical leads
    CHECK(rels[0].max_term(omax).first == w({0, 1}));
    CHECK(rels[1].max_term(omax).first == w({1, 0}));
    CHECK(rels[2].max_term(omax).first == w({0, 3}));
    CHECK(rels[3].max_term(omax).first == w({1, 2}));
    // series leads agree: the x-words have theta-weight 2, the y-terms 3 or 6
    CHECK(rels[0].min_term(omin).first == w({0, 1}));
    CHECK(rels[1].min_term(omin).first == w({1, 0}));
    CHECK(rels[2].min_term(omin).first == w({0, 3}));
    CHECK(rels[3].min_term(omin).first == w({1, 2}));
    CHECK(rels[0].min_term(omin).second == Scalar(1));
    // under the classical order the min term of r1 is the linear one
    CHECK(rels[0].min_term(omax).first == w({2}));
    CHECK(rels[0].max_term(omin).first == w({2, 2}));
}

TEST_CASE("make_monic") {
    Context ctx = xy_ctx();
    OrderSpec o = OrderSpec::deg_lex(ctx.alphabet, {0, 1});
    Poly f = mono(ctx, {0, 1}, -2) + mono(ctx, {1}, 4);
    Poly m = f.make_monic(o, LeadMode::Max);
    CHECK(m.coeff(w({0, 1})) == Scalar(1));
    CHECK(m.coeff(w({1})) == Scalar(-2));
    Poly m2 = f.make_monic(o, LeadMode::Min);
    CHECK(m2.coeff(w({1})) == Scalar(1));
    CHECK_THROWS(Poly::zero(ctx).make_monic(o, LeadMode::Max));
}

TEST_CASE("truncation") {
    Context ctx = main_ctx();
    Poly f = mono(ctx, {2, 2}) + mono(ctx, {2}) + mono(ctx, {0, 1, 0}) + mono(ctx, {});
    Poly t = f.truncated(2, BoundMode::ByLength);
    CHECK(t.term_count() == 2);  // 1 and y1 survive
    CHECK(t.coeff(w({2})) == Scalar(1));
    Poly tw = f.truncated(4, BoundMode::ByWeight);
    CHECK(tw.term_count() == 3);  // y1^2 (weight 6) dropped, x1x2x1 (weight 3) kept
    CHECK(tw.coeff(w({0, 1, 0})) == Scalar(1));
}

TEST_CASE("leading-term multiplicativity under admissible orders") {
    Context ctx = main_ctx();
    std::vector<OrderSpec> orders{main_order_max(ctx), main_order_min(ctx)};
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 1000; ++iter) {
        Poly f = random_poly(rng, ctx, 4, 4);
        Poly g = random_poly(rng, ctx, 4, 4);
        if (f.is_zero() || g.is_zero()) continue;
        Poly fg = f * g;
        REQUIRE(!fg.is_zero());  // no zero divisors in a free algebra over a field
        for (const auto& o : orders) {
            auto [wf, cf] = f.max_term(o);
            auto [wg, cg] = g.max_term(o);
            auto [wfg, cfg] = fg.max_term(o);
            CHECK(wfg == wf * wg);
            CHECK(cfg == cf * cg);
            auto [mf, df] = f.min_term(o);
            auto [mg, dg] = g.min_term(o);
            auto [mfg, dfg] = fg.min_term(o);
            CHECK(mfg == mf * mg);
            CHECK(dfg == df * dg);
        }
    }
}

TEST_CASE("truncation is a homomorphism of truncated polynomials") {
    Context ctx = main_ctx();
    std::mt19937 rng(987654);
    for (int iter = 0; iter < 200; ++iter) {
        Poly f = random_poly(rng, ctx, 4, 4);
        Poly g = random_poly(rng, ctx, 4, 4);
        for (auto mode : {BoundMode::ByLength, BoundMode::ByWeight}) {
            for (unsigned long b : {2ul, 5ul}) {
                auto tf = truncate(f, b, mode), tg = truncate(g, b, mode);
                CHECK(mul(tf, tg).poly == (f * g).truncated(b, mode));
                CHECK(add(tf, tg).poly == (f + g).truncated(b, mode));
            }
        }
    }
}
