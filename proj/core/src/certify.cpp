#include "gsb/certify.hpp"

#include <stdexcept>

namespace gsb {

std::string to_string(Certificate::Verdict v) {
    switch (v) {
        case Certificate::Verdict::Certified: return "certified-residually-nilpotent";
        case Certificate::Verdict::RefutedHypothesis: return "refuted-hypothesis";
        case Certificate::Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Certificate certify_residual_nilpotence(const Presentation& p, unsigned long weight_bound,
                                        bool record_traces) {
    if (!p.order_min.is_n_order())
        throw std::invalid_argument("series order must be an admissible N-order");
    Certificate cert;
    cert.weight_bound = weight_bound;

    std::vector<Poly> rels;
    rels.reserve(p.relations.size());
    bool leads_ok = true;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        Poly r = p.relations[i].make_monic(p.order_max, LeadMode::Max);
        auto [maxw, maxc] = r.max_term(p.order_max);
        auto [minw, minc] = r.min_term(p.order_min);
        LeadingMatch m{i, maxw, minw, maxw == minw, maxc == 1 && minc == 1};
        leads_ok = leads_ok && m.equal && m.both_monic;
        cert.leading.push_back(std::move(m));
        rels.push_back(std::move(r));
    }

    cert.classical_report = check_gs_classical(rels, p.order_max, record_traces);
    cert.series_report = check_gs_series(rels, p.order_min, weight_bound, record_traces);

    bool refuted = !leads_ok ||
                   cert.classical_report.verdict == GSReport::Verdict::NotGS ||
                   cert.series_report.verdict == GSReport::Verdict::NotGS;
    if (refuted)
        cert.verdict = Certificate::Verdict::RefutedHypothesis;
    else if (cert.classical_report.is_gs() && cert.series_report.is_gs())
        cert.verdict = Certificate::Verdict::Certified;
    else
        cert.verdict = Certificate::Verdict::Inconclusive;
    return cert;
}

bool check_acyclic(const Poly& p, std::size_t base_count) {
    for (const auto& [w, c] : p.terms()) {
        if (w.length() > 1) continue;
        bool has_base = false;
        for (std::size_t i = 0; i < w.length(); ++i)
            if (w.at(i) < base_count) has_base = true;
        if (!has_base) return false;  // pure-Y constant or linear term survives
    }
    return true;
}

ParafreeFamily make_parafree_family(std::vector<Letter> base, std::vector<Letter> added,
                                    Field field) {
    std::vector<Letter> all = base;
    all.insert(all.end(), added.begin(), added.end());
    Context ctx{std::make_shared<Alphabet>(std::move(all)), std::move(field)};
    return ParafreeFamily{std::move(ctx), base.size(), {}};
}

Presentation build_parafree_presentation(const ParafreeFamily& family, OrderSpec order_max,
                                         OrderSpec order_min, std::string name) {
    const std::size_t added = family.ctx.alphabet->size() - family.base_count;
    if (family.polys.size() != added)
        throw std::invalid_argument("family needs one polynomial per adjoined letter");
    std::vector<Poly> rels;
    for (std::size_t j = 0; j < added; ++j) {
        const Poly& py = family.polys[j];
        if (py.context() != family.ctx)
            throw std::invalid_argument("family polynomial over a different context");
        if (!check_acyclic(py, family.base_count))
            throw std::invalid_argument("family polynomial is not acyclic");
        Poly rel = Poly::monomial(family.ctx, Word::single(family.base_count + j)) - py;
        rels.push_back(rel.make_monic(order_max, LeadMode::Max));
    }
    return Presentation(family.ctx, std::move(rels), std::move(order_max), std::move(order_min),
                        std::move(name));
}

FamilyExampleResult generate_family_example(
    std::size_t n, std::size_t m, const std::vector<std::size_t>& u_letters,
    const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& phi_terms,
    const std::vector<unsigned>& y_weights, unsigned long weight_bound) {
    FamilyExampleResult res;
    if (n < 1 || u_letters.empty()) {
        res.rejection = "the word u must be a nonempty word over the base letters";
        return res;
    }
    if (y_weights.size() != m) {
        res.rejection = "expected one weight per adjoined letter";
        return res;
    }
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < n; ++i) letters.push_back({"x" + std::to_string(i + 1), 1});
    for (std::size_t j = 0; j < m; ++j)
        letters.push_back({"y" + std::to_string(j + 1), y_weights[j]});
    Context ctx{std::make_shared<Alphabet>(std::move(letters)), Field::rationals()};

    std::vector<std::uint8_t> uls;
    for (std::size_t l : u_letters) {
        if (l >= n) {
            res.rejection = "u uses a letter outside the base block";
            return res;
        }
        uls.push_back(static_cast<std::uint8_t>(l));
    }
    Word u(std::move(uls));

    // u = u'u''u' with u' != 1 is forbidden; a border longer than |u|/2
    // always yields a shorter one, so checking k <= |u|/2 suffices
    for (std::size_t k = 1; 2 * k <= u.length(); ++k) {
        if (u.prefix(k) == u.suffix(k)) {
            res.rejection = "u factors as u'u''u' with u' = " + u.prefix(k).str(*ctx.alphabet);
            return res;
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (y_weights[j] <= u.length()) {
            res.rejection = "weight of y" + std::to_string(j + 1) + " must exceed |u| = " +
                            std::to_string(u.length());
            return res;
        }
    }

    std::vector<std::size_t> prec(n + m);
    for (std::size_t i = 0; i < n + m; ++i) prec[i] = i;  // x1 > ... > xn > y1 > ... > ym
    OrderSpec order_max = OrderSpec::deg_lex(ctx.alphabet, prec);

    Poly phi(ctx);
    for (const auto& [mono, coeff] : phi_terms) {
        if (mono.empty()) {
            res.rejection = "phi may not have a constant term";
            return res;
        }
        std::vector<std::uint8_t> vls;
        for (std::size_t l : mono) {
            if (l >= m) {
                res.rejection = "phi uses a letter outside the adjoined block";
                return res;
            }
            vls.push_back(static_cast<std::uint8_t>(n + l));
        }
        Word v(std::move(vls));
        if (order_max.compare(v, u) > 0) {
            res.rejection = "monomial " + v.str(*ctx.alphabet) + " of phi exceeds u in deg-lex";
            return res;
        }
        phi.add_term(v, coeff);
    }

    // series order: adjoined letters largest, theta(x) = 1
    std::vector<std::size_t> sprec;
    for (std::size_t j = 0; j < m; ++j) sprec.push_back(n + j);
    for (std::size_t i = 0; i < n; ++i) sprec.push_back(i);
    std::vector<unsigned> theta(n, 1);
    theta.insert(theta.end(), y_weights.begin(), y_weights.end());
    OrderSpec order_min = OrderSpec::theta_lex(ctx.alphabet, std::move(sprec), std::move(theta));

    Poly rel = Poly::monomial(ctx, u) - phi;
    Presentation pres(ctx, {std::move(rel)}, std::move(order_max), std::move(order_min),
                      "family-instance");
    res.certificate = certify_residual_nilpotence(pres, weight_bound);
    res.presentation = std::move(pres);
    res.accepted = true;
    return res;
}

}  // namespace gsb
