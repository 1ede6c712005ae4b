#include "gsb/report.hpp"

#include <cstdio>

namespace gsb {

std::string input_digest(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json report_header(const std::string& subcommand, const std::string& input_text) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["subcommand"] = subcommand;
    j["input_digest"] = input_digest(input_text);
    return j;
}

Json scalar_to_json(const Scalar& s) {
    return Field::to_string(s);
}

Json admissibility_to_json(const AdmissibilityReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["max_length"] = rep.max_length;
    Json v = Json::array();
    for (const auto& viol : rep.violations) v.push_back(viol.description);
    j["violations"] = v;
    return j;
}

namespace {

Json trace_to_json(const std::vector<ReductionStep>& steps, const Context& ctx) {
    Json arr = Json::array();
    for (const auto& st : steps) {
        Json s;
        s["rule"] = st.rule;
        s["position"] = st.position;
        s["left"] = st.left.str(*ctx.alphabet);
        s["right"] = st.right.str(*ctx.alphabet);
        s["coeff"] = scalar_to_json(st.coeff);
        arr.push_back(std::move(s));
    }
    return arr;
}

}  // namespace

Json gs_report_to_json(const GSReport& rep, const Context& ctx) {
    Json j;
    j["mode"] = rep.mode == LeadMode::Max ? "classical" : "series";
    j["verdict"] = to_string(rep.verdict);
    if (rep.mode == LeadMode::Min) j["weight_bound"] = rep.weight_bound;
    Json comps = Json::array();
    for (const auto& c : rep.compositions) {
        Json cj;
        cj["kind"] = to_string(c.kind);
        cj["word"] = c.w.str(*ctx.alphabet);
        cj["left_rule"] = c.left;
        cj["right_rule"] = c.right;
        cj["status"] = to_string(c.status);
        cj["steps"] = c.steps;
        if (!c.trace.empty()) cj["trace"] = trace_to_json(c.trace, ctx);
        comps.push_back(std::move(cj));
    }
    j["compositions"] = comps;
    return j;
}

Json certificate_to_json(const Certificate& cert, const Context& ctx) {
    Json j;
    j["verdict"] = to_string(cert.verdict);
    j["weight_bound"] = cert.weight_bound;
    Json leads = Json::array();
    for (const auto& m : cert.leading) {
        Json mj;
        mj["relation"] = m.relation;
        mj["classical_lead"] = m.max_lead.str(*ctx.alphabet);
        mj["series_lead"] = m.min_lead.str(*ctx.alphabet);
        mj["equal"] = m.equal;
        mj["both_monic"] = m.both_monic;
        leads.push_back(std::move(mj));
    }
    j["leading_terms"] = leads;
    j["classical"] = gs_report_to_json(cert.classical_report, ctx);
    j["series"] = gs_report_to_json(cert.series_report, ctx);
    if (cert.verdict == Certificate::Verdict::RefutedHypothesis)
        j["note"] = "a refuted certificate refutes the hypotheses of the criterion, "
                    "not residual nilpotence itself";
    return j;
}

Json slice_report_to_json(const SliceReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["checks"] = rep.checks;
    Json fails = Json::array();
    for (const auto& f : rep.failures)
        fails.push_back(Json{{"identity", f.identity}, {"input", f.input}});
    j["failures"] = fails;
    return j;
}

Json ext_report_to_json(const ExtReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["transpose_match"] = rep.transpose_match;
    j["operator_identities"] = slice_report_to_json(rep.operator_identities);
    j["kernel_dim"] = rep.kernel_dim;
    return j;
}

Json iomega_report_to_json(const IomegaReport& rep) {
    Json j;
    j["passed"] = rep.passed;
    j["identity_r3"] = rep.identity_r3;
    j["identity_r4"] = rep.identity_r4;
    j["displayed_sign_variant_holds"] = rep.displayed_sign_variant_holds;
    if (!rep.displayed_sign_variant_holds)
        j["sign_note"] = "the variant with a minus on the middle term fails as an exact "
                         "polynomial identity; the sign-corrected identity is what this "
                         "report verifies";
    auto steps = [](const std::vector<MembershipStep>& ms) {
        Json arr = Json::array();
        for (const auto& m : ms)
            arr.push_back(Json{{"n", m.n}, {"verified", m.verified}, {"cofactors", m.cofactors}});
        return arr;
    };
    j["membership_r3"] = steps(rep.memberships_r3);
    j["membership_r4"] = steps(rep.memberships_r4);
    return j;
}

}  // namespace gsb
