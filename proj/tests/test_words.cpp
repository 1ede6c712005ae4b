#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "common.hpp"
#include "gsb/words.hpp"

using namespace gsb;
using namespace gsbtest;

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({{"x", 1}, {"x", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({{"x", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({{"2x", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({{"a b", 1}}), std::invalid_argument);
    Alphabet a({{"x", 1}, {"y_2", 3}});
    CHECK(a.size() == 2);
    CHECK(a.index_of("y_2") == 1);
    CHECK(!a.index_of("z").has_value());
}

TEST_CASE("word operations") {
    Context ctx = main_ctx();
    const Alphabet& a = *ctx.alphabet;
    Word u = w({0, 1, 2});
    CHECK(u.length() == 3);
    CHECK(u.weight(a) == 5);
    CHECK(Word::one().weight(a) == 0);
    CHECK(u.str(a) == "x1*x2*y1");
    CHECK(Word::one().str(a) == "1");
    CHECK(u.prefix(2) == w({0, 1}));
    CHECK(u.suffix(1) == w({2}));
    CHECK(u.subword(1, 2) == w({1, 2}));
    CHECK_THROWS_AS(u.subword(2, 2), std::out_of_range);
    CHECK(w({0, 1}) * w({2}) == u);
    CHECK(u * Word::one() == u);
    CHECK(Word::one() * u == u);
}

TEST_CASE("deg-lex comparisons") {
    Context ctx = main_ctx();
    OrderSpec o = main_order_max(ctx);
    // shorter < longer, then lex with x1 largest
    CHECK(o.less(w({1}), w({0})));           // x2 < x1
    CHECK(o.less(w({3}), w({2})));           // y2 < y1
    CHECK(o.less(w({2}), w({0, 1})));        // length beats letters
    CHECK(o.less(w({0, 1}), w({0, 0})));     // x1x2 < x1x1
    CHECK(o.compare(w({0, 1}), w({0, 1})) == 0);
    CHECK(o.theta(w({2, 2})) == 2);          // deg-lex theta is plain length
}

TEST_CASE("theta-lex comparisons") {
    Context ctx = main_ctx();
    OrderSpec o = main_order_min(ctx);
    CHECK(o.theta(w({0, 1})) == 2);
    CHECK(o.theta(w({2})) == 3);
    CHECK(o.less(w({0, 1}), w({2})));        // weight 2 < weight 3
    CHECK(o.less(w({3}), w({2})));           // equal weight, y2 below y1
    CHECK(o.less(w({1}), w({0})));           // x2 < x1
    CHECK(o.less(w({0}), w({2})));           // x1 < y1 despite precedence rank
    for (const auto& u : enumerate_words(*ctx.alphabet, 3, BoundMode::ByLength))
        if (!u.is_one()) CHECK(o.less(Word::one(), u));
}

TEST_CASE("admissibility check") {
    Context ctx = main_ctx();
    CHECK(check_admissible(main_order_max(ctx), 4).passed);
    CHECK(check_admissible(main_order_min(ctx), 4).passed);

    auto lex = OrderSpec::lex(ctx.alphabet, {0, 1, 2, 3});
    CHECK(!lex.admissible_by_construction());
    auto rep = check_admissible(lex, 3);
    CHECK(!rep.passed);
    CHECK(!rep.violations.empty());
    CHECK(!rep.violations.front().description.empty());
}

TEST_CASE("theta-lex with unit weights agrees with deg-lex") {
    Context ctx = xy_ctx();
    auto dl = OrderSpec::deg_lex(ctx.alphabet, {0, 1});
    auto tl = OrderSpec::theta_lex(ctx.alphabet, {0, 1}, {1, 1});
    auto words = enumerate_words(*ctx.alphabet, 4, BoundMode::ByLength);
    for (const auto& u : words)
        for (const auto& v : words) CHECK(dl.compare(u, v) == tl.compare(u, v));
}

TEST_CASE("orders are total and admissible orders are translation invariant") {
    Context ctx = xy_ctx();
    auto words = enumerate_words(*ctx.alphabet, 4, BoundMode::ByLength);
    for (OrderSpec o : {OrderSpec::deg_lex(ctx.alphabet, {0, 1}),
                        OrderSpec::theta_lex(ctx.alphabet, {1, 0}, {1, 2})}) {
        for (const auto& u : words) {
            for (const auto& v : words) {
                CHECK(o.compare(u, v) == -o.compare(v, u));
                CHECK((o.compare(u, v) == 0) == (u == v));
                if (!o.less(u, v)) continue;
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b) {
                        Word l = Word::single(a), r = Word::single(b);
                        CHECK(o.less(l * u * r, l * v * r));
                    }
            }
        }
    }
}

TEST_CASE("N-order property: bounded sets are finite and enumerable") {
    Context ctx = main_ctx();
    OrderSpec o = main_order_min(ctx);
    CHECK(o.is_n_order());
    CHECK(!OrderSpec::lex(ctx.alphabet, {0, 1, 2, 3}).is_n_order());
    // every word of theta-weight <= 8 is reachable by the weight enumerator
    auto ws = enumerate_words(*ctx.alphabet, 8, BoundMode::ByWeight);
    for (const auto& u : ws) CHECK(u.weight(*ctx.alphabet) <= 8);
    // cross-check the count against a direct recursion on remaining weight
    std::function<std::size_t(unsigned long)> count = [&](unsigned long b) -> std::size_t {
        std::size_t total = 1;
        for (std::size_t l = 0; l < ctx.alphabet->size(); ++l) {
            unsigned wl = ctx.alphabet->letter(l).weight;
            if (wl <= b) total += count(b - wl);
        }
        return total;
    };
    CHECK(ws.size() == count(8));
}

TEST_CASE("word enumeration") {
    Context ctx = xy_ctx();
    auto ws = enumerate_words(*ctx.alphabet, 2, BoundMode::ByLength);
    CHECK(ws.size() == 7);  // 1 + 2 + 4
    CHECK(ws.front().is_one());

    Context m = main_ctx();
    auto byw = enumerate_words(*m.alphabet, 3, BoundMode::ByWeight);
    CHECK(byw.size() == 17);  // 1 + 2 + 4 + 8 x-words and the two single y's

    auto trivial = enumerate_words(*ctx.alphabet, 0, BoundMode::ByLength);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].is_one());

    CHECK_THROWS(enumerate_words(*ctx.alphabet, 30, BoundMode::ByLength, 1000));
}

TEST_CASE("factor occurrences") {
    Word u = w({0, 0, 0, 0});
    CHECK(find_factor_occurrences(u, w({0, 0})) == std::vector<std::size_t>{0, 1, 2});
    CHECK(find_factor_occurrences(w({0, 1, 0, 1}), w({1, 0})) == std::vector<std::size_t>{1});
    CHECK(find_factor_occurrences(w({0}), w({0, 1})).empty());
    CHECK(has_factor(w({0, 1, 2}), w({1, 2})));
    CHECK(!has_factor(w({0, 1, 2}), w({2, 1})));
    CHECK_THROWS_AS(find_factor_occurrences(w({0, 1}), Word::one()), std::invalid_argument);
    CHECK(!has_factor(w({0, 1}), Word::one()));
}
