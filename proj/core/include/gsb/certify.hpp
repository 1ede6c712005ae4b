#pragma once

#include <optional>

#include "gsb/quotients.hpp"

namespace gsb {

/// Per-relation comparison of the classical max term and the series min term.
struct LeadingMatch {
    std::size_t relation;
    Word max_lead;
    Word min_lead;
    bool equal;
    bool both_monic;  // after max-normalization, the min coefficient is also 1
};

/// Machine-checkable residual-nilpotence verdict: certified requires the
/// classical check is-GS, the series check exactly is-GS (not up to the
/// bound), and every relation's two leading words to agree, both monic.
/// A refuted verdict refutes the certificate's hypotheses, not residual
/// nilpotence itself.
struct Certificate {
    enum class Verdict { Certified, RefutedHypothesis, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    GSReport classical_report;
    GSReport series_report;
    std::vector<LeadingMatch> leading;
    unsigned long weight_bound = 0;
};

std::string to_string(Certificate::Verdict v);

Certificate certify_residual_nilpotence(const Presentation& p, unsigned long weight_bound,
                                        bool record_traces = false);

/// Acyclicity test for a polynomial over a split alphabet whose first
/// base_count letters form the base block: after deleting every term that
/// contains a base letter, the surviving polynomial must have zero constant
/// and zero linear part.
bool check_acyclic(const Poly& p, std::size_t base_count);

/// A base alphabet X, adjoined letters Y with weights, and one acyclic
/// polynomial per adjoined letter. Letters 0..base_count-1 of ctx are X.
struct ParafreeFamily {
    Context ctx;
    std::size_t base_count;
    std::vector<Poly> polys;  // p_y, indexed like the adjoined letters
};

ParafreeFamily make_parafree_family(std::vector<Letter> base, std::vector<Letter> added,
                                    Field field = Field::rationals());

/// Presentation with relations y - p_y (normalized monic under order_max).
/// Throws when some p_y fails check_acyclic.
Presentation build_parafree_presentation(const ParafreeFamily& family, OrderSpec order_max,
                                         OrderSpec order_min, std::string name = "");

/// One-relation family instances u = phi: u a word over the base letters,
/// phi supported on nonempty words over the adjoined letters.
struct FamilyExampleResult {
    bool accepted = false;
    std::string rejection;  // precondition violation with witness
    std::optional<Presentation> presentation;
    std::optional<Certificate> certificate;
};

/// Builds the alphabet {x_1..x_n, y_1..y_m}, validates the preconditions
/// (u nonempty and unbordered, every y weight > |u|, every monomial of phi
/// deg-lex below u, phi constant-free over the y block) and certifies the
/// resulting presentation.
FamilyExampleResult generate_family_example(
    std::size_t n, std::size_t m, const std::vector<std::size_t>& u_letters,
    const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& phi_terms,
    const std::vector<unsigned>& y_weights, unsigned long weight_bound = 30);

}  // namespace gsb
