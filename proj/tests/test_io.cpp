#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "common.hpp"
#include "gsb/bundled.hpp"
#include "gsb/presentation_io.hpp"
#include "gsb/report.hpp"

using namespace gsb;
using namespace gsbtest;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("expression parsing") {
    Context ctx = main_ctx();
    Poly r1 = parse_poly_expr("x1*x2 + y1^2 - y1", ctx);
    CHECK(r1 == main_relations(ctx)[0]);
    CHECK(parse_poly_expr("2*x1 - x1 - x1", ctx).is_zero());
    CHECK(parse_poly_expr("1/2*x1 + 1/2*x1", ctx) == mono(ctx, {0}));
    CHECK(parse_poly_expr("-(x1 - x2)*y1", ctx) ==
          mono(ctx, {1, 2}) - mono(ctx, {0, 2}));
    CHECK(parse_poly_expr("x1^0", ctx) == Poly::monomial(ctx, Word::one()));
    CHECK(parse_poly_expr("(x1 + y1)^2", ctx) ==
          mono(ctx, {0, 0}) + mono(ctx, {0, 2}) + mono(ctx, {2, 0}) + mono(ctx, {2, 2}));
    CHECK(parse_poly_expr("3", ctx) == Poly::monomial(ctx, Word::one()).scaled(Scalar(3)));
}

TEST_CASE("expression errors carry positions") {
    Context ctx = main_ctx();
    try {
        parse_poly_expr("x1 + qq", ctx);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown identifier 'qq'") != std::string::npos);
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_poly_expr("x1 x2", ctx), ParseError);      // missing '*'
    CHECK_THROWS_AS(parse_poly_expr("x1 *", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("x1^-1", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("1/0", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("(x1", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("x1 @ x2", ctx), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("", ctx), ParseError);
}

TEST_CASE("printed expressions parse back") {
    Context ctx = main_ctx();
    std::mt19937 rng(2718);
    std::uniform_int_distribution<std::size_t> let(0, 3);
    std::uniform_int_distribution<int> cf(-6, 6);
    std::uniform_int_distribution<std::size_t> len(0, 5);
    for (int iter = 0; iter < 200; ++iter) {
        Poly f(ctx);
        for (int t = 0; t < 4; ++t) {
            Word u;
            std::size_t n = len(rng);
            for (std::size_t i = 0; i < n; ++i) u = u * Word::single(let(rng));
            int c = cf(rng);
            if (c) f.add_term(u, Scalar(c, 1 + (iter % 3)));
        }
        CHECK(parse_poly_expr(print_poly_expr(f), ctx) == f);
    }
    CHECK(print_poly_expr(Poly::zero(ctx)) == "0");
}

TEST_CASE("repeated letters print as powers") {
    Context ctx = main_ctx();
    std::string s = print_poly_expr(mono(ctx, {2, 2, 2, 0}));
    CHECK(s.find("y1^3") != std::string::npos);
    CHECK(parse_poly_expr(s, ctx) == mono(ctx, {2, 2, 2, 0}));
}

TEST_CASE("bundled presentations parse and reprint stably") {
    for (const auto& ex : bundled_examples()) {
        CAPTURE(ex.name);
        if (ex.unsupported_order) continue;
        auto pf = parse_presentation(ex.text);
        CHECK(pf.presentation.name == ex.name);
        std::string printed = print_presentation(pf);
        auto pf2 = parse_presentation(printed);
        CHECK(pf2.presentation.relations == pf.presentation.relations);
        CHECK(*pf2.presentation.ctx.alphabet == *pf.presentation.ctx.alphabet);
        CHECK(pf2.presentation.order_max.kind() == pf.presentation.order_max.kind());
        CHECK(pf2.presentation.order_min.precedence() == pf.presentation.order_min.precedence());
        CHECK(pf2.meta == pf.meta);
        // printing is idempotent byte for byte
        CHECK(print_presentation(pf2) == printed);
    }
}

TEST_CASE("bundled texts match the files shipped under data/") {
    for (const auto& ex : bundled_examples()) {
        CAPTURE(ex.name);
        CHECK(ex.text == slurp(std::string(GSB_DATA_DIR) + "/presentations/" + ex.name + ".json"));
    }
    CHECK(find_bundled("main") != nullptr);
    CHECK(find_bundled("no-such") == nullptr);
}

TEST_CASE("the unsupported series order is rejected with an explanation") {
    const BundledExample* ex = find_bundled("counterexample-one");
    REQUIRE(ex != nullptr);
    CHECK(ex->unsupported_order);
    try {
        parse_presentation(ex->text);
        FAIL("expected rejection");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("N-order") != std::string::npos);
        CHECK(std::string(e.what()).find("bounded-above") != std::string::npos);
    }
}

TEST_CASE("a pure lex series order is rejected") {
    std::string text = R"({
        "field": "rational",
        "generators": [{"name": "x", "weight": 1}, {"name": "y", "weight": 1}],
        "relations": ["x*y - y*x"],
        "orders": {
            "classical": {"kind": "deg-lex", "precedence": ["x", "y"]},
            "series": {"kind": "lex", "precedence": ["x", "y"]}
        }
    })";
    try {
        parse_presentation(text);
        FAIL("expected rejection");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("N-order") != std::string::npos);
    }
}

TEST_CASE("presentation file validation") {
    CHECK_THROWS_AS(parse_presentation("not json"), ParseError);
    CHECK_THROWS_AS(parse_presentation("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_presentation(R"({"field": "real", "generators": []})"), ParseError);
    std::string no_orders = R"({
        "field": "rational",
        "generators": [{"name": "x", "weight": 1}]
    })";
    CHECK_THROWS_AS(parse_presentation(no_orders), ParseError);
    std::string zero_rel = R"({
        "field": "rational",
        "generators": [{"name": "x", "weight": 1}],
        "relations": ["x - x"],
        "orders": {
            "classical": {"kind": "deg-lex", "precedence": ["x"]},
            "series": {"kind": "deg-lex", "precedence": ["x"]}
        }
    })";
    CHECK_THROWS_AS(parse_presentation(zero_rel), ParseError);
}

TEST_CASE("prime fields round trip through the file format") {
    std::string text = R"({
        "field": {"prime": 7},
        "generators": [{"name": "x", "weight": 1}, {"name": "y", "weight": 1}],
        "relations": ["3*x*y + 4*x*y"],
        "orders": {
            "classical": {"kind": "deg-lex", "precedence": ["x", "y"]},
            "series": {"kind": "deg-lex", "precedence": ["x", "y"]}
        }
    })";
    // 3 + 4 = 0 in F_7, so the relation collapses to zero and is rejected
    CHECK_THROWS_AS(parse_presentation(text), ParseError);
    std::string ok = R"({
        "field": {"prime": 7},
        "generators": [{"name": "x", "weight": 1}, {"name": "y", "weight": 1}],
        "relations": ["3*x*y - y*x"],
        "orders": {
            "classical": {"kind": "deg-lex", "precedence": ["x", "y"]},
            "series": {"kind": "deg-lex", "precedence": ["x", "y"]}
        }
    })";
    auto pf = parse_presentation(ok);
    CHECK(pf.presentation.ctx.field.characteristic() == 7);
    CHECK(pf.presentation.relations[0].coeff(w({0, 1})) == Scalar(3));
    auto pf2 = parse_presentation(print_presentation(pf));
    CHECK(pf2.presentation.relations == pf.presentation.relations);
}

TEST_CASE("report primitives are deterministic") {
    CHECK(input_digest("") == "cbf29ce484222325");
    CHECK(input_digest("a") == "af63dc4c8601ec8c");
    CHECK(input_digest("abc") == input_digest("abc"));
    CHECK(input_digest("abc") != input_digest("abd"));

    Json h1 = report_header("certify", "payload");
    Json h2 = report_header("certify", "payload");
    CHECK(h1.dump() == h2.dump());
    CHECK(h1.at("schema_version") == kReportSchemaVersion);
    CHECK(h1.at("subcommand") == "certify");

    CHECK(scalar_to_json(Scalar(1, 2)) == Json("1/2"));
    CHECK(scalar_to_json(Scalar(-3)) == Json("-3"));
}

TEST_CASE("full reports are byte-stable across runs") {
    const BundledExample* ex = find_bundled("main");
    REQUIRE(ex != nullptr);
    std::string d1, d2;
    for (std::string* out : {&d1, &d2}) {
        auto pf = parse_presentation(ex->text);
        auto cert = certify_residual_nilpotence(pf.presentation, 30, true);
        Json j = report_header("certify", ex->text);
        j["certificate"] = certificate_to_json(cert, pf.presentation.ctx);
        *out = j.dump(2);
    }
    CHECK(d1 == d2);
    CHECK(d1.find("certified-residually-nilpotent") != std::string::npos);
}
