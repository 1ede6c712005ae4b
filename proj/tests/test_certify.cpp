#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "gsb/bundled.hpp"
#include "gsb/certify.hpp"
#include "gsb/presentation_io.hpp"

using namespace gsb;
using namespace gsbtest;

TEST_CASE("every certifiable bundled presentation certifies") {
    for (const char* name : {"main", "kxy", "exrn", "para", "family"}) {
        CAPTURE(name);
        const BundledExample* ex = find_bundled(name);
        REQUIRE(ex != nullptr);
        auto pf = parse_presentation(ex->text);
        auto cert = certify_residual_nilpotence(pf.presentation, 30);
        CHECK(cert.verdict == Certificate::Verdict::Certified);
        CHECK(to_string(cert.verdict) == ex->expected);
        for (const auto& m : cert.leading) {
            CHECK(m.equal);
            CHECK(m.both_monic);
        }
    }
}

TEST_CASE("headline certificate details") {
    Context ctx = main_ctx();
    Presentation p(ctx, main_relations(ctx), main_order_max(ctx), main_order_min(ctx), "main");
    auto cert = certify_residual_nilpotence(p, 30, true);
    CHECK(cert.verdict == Certificate::Verdict::Certified);
    CHECK(cert.classical_report.compositions.size() == 4);
    CHECK(cert.series_report.compositions.size() == 4);
    std::vector<Word> leads{w({0, 1}), w({1, 0}), w({0, 3}), w({1, 2})};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(cert.leading[i].max_lead == leads[i]);
        CHECK(cert.leading[i].min_lead == leads[i]);
    }
}

TEST_CASE("a leading-term mismatch refutes the hypotheses") {
    Context ctx = main_ctx();
    // max lead x1x2 but theta-min term x1 (weight 1 beats weight 2)
    Poly rel = mono(ctx, {0, 1}) - mono(ctx, {0});
    Presentation p(ctx, {rel}, main_order_max(ctx), main_order_min(ctx));
    auto cert = certify_residual_nilpotence(p, 30);
    CHECK(cert.verdict == Certificate::Verdict::RefutedHypothesis);
    CHECK(!cert.leading[0].equal);
}

TEST_CASE("an unresolvable composition refutes the hypotheses") {
    Context ctx = main_ctx();
    auto rels = main_relations(ctx);
    Presentation p(ctx, {rels[0], rels[1]}, main_order_max(ctx), main_order_min(ctx));
    auto cert = certify_residual_nilpotence(p, 30);
    CHECK(cert.verdict == Certificate::Verdict::RefutedHypothesis);
    CHECK(cert.classical_report.verdict == GSReport::Verdict::NotGS);
}

TEST_CASE("an exhausted weight bound is inconclusive") {
    Context ctx = main_ctx();
    Presentation p(ctx, main_relations(ctx), main_order_max(ctx), main_order_min(ctx));
    auto cert = certify_residual_nilpotence(p, 3);
    CHECK(cert.verdict == Certificate::Verdict::Inconclusive);
    CHECK(cert.series_report.verdict == GSReport::Verdict::UpToBound);
}

TEST_CASE("the series order must be an N-order") {
    Context ctx = main_ctx();
    Presentation p(ctx, main_relations(ctx), main_order_max(ctx),
                   OrderSpec::lex(ctx.alphabet, {2, 3, 0, 1}));
    CHECK_THROWS_AS(certify_residual_nilpotence(p, 30), std::invalid_argument);
}

TEST_CASE("acyclicity of defining polynomials") {
    Context ctx = main_ctx();  // base block {x1, x2}, adjoined {y1, y2}
    CHECK(check_acyclic(mono(ctx, {0, 1}) + mono(ctx, {2, 2}), 2));
    CHECK(check_acyclic(mono(ctx, {0, 2}) + mono(ctx, {3, 3, 3}), 2));
    CHECK(!check_acyclic(mono(ctx, {0, 1}) + mono(ctx, {2}), 2));       // linear y1
    CHECK(!check_acyclic(mono(ctx, {2, 2}) + Poly::monomial(ctx, Word::one()), 2));
    CHECK(check_acyclic(Poly::zero(ctx), 2));
}

TEST_CASE("parafree presentations from acyclic families") {
    auto fam = make_parafree_family({{"x1", 1}, {"x2", 1}}, {{"y1", 3}, {"y2", 3}});
    CHECK(fam.base_count == 2);
    CHECK(fam.ctx.alphabet->size() == 4);
    Context ctx = fam.ctx;
    fam.polys = {mono(ctx, {0, 1}) + mono(ctx, {2, 2}),
                 mono(ctx, {1, 0}) + mono(ctx, {3, 3})};
    auto p = build_parafree_presentation(fam, main_order_max(ctx), main_order_min(ctx), "pf");
    REQUIRE(p.relations.size() == 2);
    // y - p_y normalizes to exactly the first two headline relations
    CHECK(p.relations[0] == main_relations(ctx)[0]);
    CHECK(p.relations[1] == main_relations(ctx)[1]);

    fam.polys[1] = mono(ctx, {3});  // linear in an adjoined letter: not acyclic
    CHECK_THROWS_AS(build_parafree_presentation(fam, main_order_max(ctx), main_order_min(ctx)),
                    std::invalid_argument);
    fam.polys.pop_back();
    CHECK_THROWS_AS(build_parafree_presentation(fam, main_order_max(ctx), main_order_min(ctx)),
                    std::invalid_argument);
}

TEST_CASE("one-relation family generator accepts a valid instance") {
    auto res = generate_family_example(2, 1, {0, 1}, {{{0, 0}, Scalar(1)}}, {3});
    REQUIRE(res.accepted);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->verdict == Certificate::Verdict::Certified);
    REQUIRE(res.presentation.has_value());
    CHECK(res.presentation->relations.size() == 1);
    // x1*x2 - y1^2, already monic
    Context ctx = res.presentation->ctx;
    CHECK(res.presentation->relations[0] == mono(ctx, {0, 1}) - mono(ctx, {2, 2}));
    // a three-letter base word with empty phi also passes
    auto res2 = generate_family_example(3, 0, {0, 1, 2}, {}, {});
    CHECK(res2.accepted);
    CHECK(res2.certificate->verdict == Certificate::Verdict::Certified);
}

TEST_CASE("one-relation family generator rejects bad instances with witnesses") {
    auto bordered = generate_family_example(1, 1, {0, 0}, {}, {3});
    CHECK(!bordered.accepted);
    CHECK(bordered.rejection.find("u factors as") != std::string::npos);
    CHECK(bordered.rejection.find("x1") != std::string::npos);

    auto light = generate_family_example(2, 1, {0, 1}, {}, {2});
    CHECK(!light.accepted);
    CHECK(light.rejection.find("must exceed |u| = 2") != std::string::npos);

    auto empty_u = generate_family_example(2, 1, {}, {}, {3});
    CHECK(!empty_u.accepted);

    auto stray = generate_family_example(2, 1, {0, 5}, {}, {3});
    CHECK(!stray.accepted);
    CHECK(stray.rejection.find("outside the base block") != std::string::npos);

    auto constant = generate_family_example(2, 1, {0, 1}, {{{}, Scalar(1)}}, {3});
    CHECK(!constant.accepted);
    CHECK(constant.rejection.find("constant") != std::string::npos);

    auto heavy = generate_family_example(2, 1, {0}, {{{0, 0}, Scalar(1)}}, {2});
    CHECK(!heavy.accepted);
    CHECK(heavy.rejection.find("exceeds u in deg-lex") != std::string::npos);
}

TEST_CASE("presentations that eliminate the adjoined letter are paraequivalent to the free algebra") {
    // y = x1*x2 + y^2 rewrites y away degree by degree, so the graded pieces
    // match the free algebra on the two base letters
    for (const char* name : {"para", "exrn"}) {
        CAPTURE(name);
        auto pf = parse_presentation(find_bundled(name)->text);
        auto para = paraequivalence_check(pf.presentation, 2, 5);
        CHECK(para.matches);
    }
}
