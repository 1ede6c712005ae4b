#pragma once

#include <map>
#include <utility>

#include "gsb/field.hpp"
#include "gsb/words.hpp"

namespace gsb {

/// Shared ambient data of a polynomial computation: the alphabet and the
/// coefficient field.
struct Context {
    AlphabetPtr alphabet;
    Field field = Field::rationals();

    bool operator==(const Context& o) const {
        return field == o.field && *alphabet == *o.alphabet;
    }
    bool operator!=(const Context& o) const { return !(*this == o); }
};

enum class LeadMode { Max, Min };

/// Finitely supported exact-coefficient noncommutative polynomial.
/// Terms are stored canonically sorted (length, then letter sequence) so
/// iteration order and printed output are deterministic.
class Poly {
public:
    using TermMap = std::map<Word, Scalar, WordKeyLess>;

    explicit Poly(Context ctx) : ctx_(std::move(ctx)) {}
    Poly(Context ctx, const Word& w, const Scalar& c);

    static Poly zero(const Context& ctx) { return Poly(ctx); }
    static Poly monomial(const Context& ctx, const Word& w) { return Poly(ctx, w, Scalar(1)); }

    const Context& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;

    bool operator==(const Poly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Order-greatest (resp. order-least) term of a nonzero polynomial.
    std::pair<Word, Scalar> max_term(const OrderSpec& order) const;
    std::pair<Word, Scalar> min_term(const OrderSpec& order) const;
    std::pair<Word, Scalar> lead_term(const OrderSpec& order, LeadMode mode) const {
        return mode == LeadMode::Max ? max_term(order) : min_term(order);
    }

    Poly make_monic(const OrderSpec& order, LeadMode mode) const;

    /// Deletes exactly the terms of length (resp. alphabet weight) >= bound.
    Poly truncated(unsigned long bound, BoundMode mode) const;

    /// Least term length; 0 for the zero polynomial.
    std::size_t min_term_length() const;
    bool has_constant_term() const { return terms_.count(Word::one()) > 0; }

    /// Augmentation: the coefficient of the identity word.
    Scalar augmentation() const { return coeff(Word::one()); }

    std::string str() const;

private:
    void check_compatible(const Poly& o) const;

    Context ctx_;
    TermMap terms_;
};

/// Truncated polynomial: the computational stand-in for a power series,
/// every stored term below the bound in the stated mode.
struct TruncatedPoly {
    Poly poly;
    unsigned long bound;
    BoundMode mode;
};

TruncatedPoly truncate(const Poly& f, unsigned long bound, BoundMode mode);
TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b);
TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b);

}  // namespace gsb
