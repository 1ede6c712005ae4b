#pragma once

#include <optional>
#include <vector>

#include "gsb/gsbases.hpp"
#include "gsb/linalg.hpp"

namespace gsb {

/// An augmented-algebra presentation: relations in the augmentation ideal
/// together with the two word orders driving the classical and the series
/// computations.
struct Presentation {
    Context ctx;
    std::vector<Poly> relations;
    OrderSpec order_max;
    OrderSpec order_min;
    std::string name;

    Presentation(Context c, std::vector<Poly> rels, OrderSpec omax, OrderSpec omin,
                 std::string nm = "");
};

/// Finite-dimensional model of A/((R) + I^n): the rule set is a completion
/// under the length cap n, the basis the normal words of length < n, and
/// multiplication reduce_max followed by truncation.
class TruncatedQuotient {
public:
    const Presentation& presentation() const { return pres_; }
    unsigned long n() const { return n_; }
    const RewriteSystem& system() const { return sys_; }
    const std::vector<Word>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    /// Image of a free-algebra element: reduce_max with the length cap.
    Poly normal_form(const Poly& f) const;
    Poly mul(const Poly& a, const Poly& b) const { return normal_form(a * b); }

    friend TruncatedQuotient build_truncated_quotient(const Presentation& p, unsigned long n,
                                                      std::size_t max_rules);

private:
    TruncatedQuotient(Presentation p, unsigned long n, RewriteSystem sys, std::vector<Word> basis)
        : pres_(std::move(p)), n_(n), sys_(std::move(sys)), basis_(std::move(basis)) {}

    Presentation pres_;
    unsigned long n_;
    RewriteSystem sys_;
    std::vector<Word> basis_;
};

/// Completes the relations under the length cap n and assembles the quotient.
/// Throws when the completion exceeds max_rules.
TruncatedQuotient build_truncated_quotient(const Presentation& p, unsigned long n,
                                           std::size_t max_rules = 100000);

/// dim Gr_k = dim I^k/I^{k+1} inside the quotient for k = 0..n-1. The image
/// of I^k is spanned by the normal forms of all words of length >= k (the
/// relations need not be homogeneous, so word length does not grade the
/// filtration; the span does).
std::vector<std::size_t> filtration_dims(const TruncatedQuotient& q);

struct ParaequivalenceResult {
    bool matches = true;
    std::vector<std::size_t> gr_dims;
    std::vector<std::size_t> expected;
};

/// Compares dim Gr_k against free_rank^k for k < n.
ParaequivalenceResult paraequivalence_check(const Presentation& p, std::size_t free_rank,
                                            unsigned long n, std::size_t max_rules = 100000);

/// Weight-d slice of H_2 = (r cap I^2)/(I r + r I) via the Hopf formula, for
/// weight-homogeneous relations. Throws on a non-homogeneous relation.
std::size_t hopf_h2_graded(const Presentation& p, unsigned long d);

/// Rank of the images of the given augmentation-ideal elements in I/I^2.
std::size_t gr1_dependence(const Presentation& p, const std::vector<Poly>& elements);

}  // namespace gsb
