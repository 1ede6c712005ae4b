#include "gsb/poly.hpp"

#include <stdexcept>

namespace gsb {

Poly::Poly(Context ctx, const Word& w, const Scalar& c) : ctx_(std::move(ctx)) {
    add_term(w, c);
}

Scalar Poly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Word& w, const Scalar& c) {
    Scalar v = ctx_.field.normalize(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(w, v);
    if (!inserted) {
        it->second = ctx_.field.add(it->second, v);
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (ctx_ != o.ctx_)
        throw std::invalid_argument("polynomials over different alphabets or fields");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, ctx_.field.neg(c));
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, ctx_.field.neg(c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(ctx_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_)
            r.add_term(wa * wb, ctx_.field.mul(ca, cb));
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(ctx_);
    Scalar v = ctx_.field.normalize(c);
    if (v == 0) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, ctx_.field.mul(k, v));
    return r;
}

std::pair<Word, Scalar> Poly::max_term(const OrderSpec& order) const {
    if (is_zero()) throw std::domain_error("max_term of the zero polynomial");
    if (*order.alphabet() != *ctx_.alphabet)
        throw std::invalid_argument("order over a different alphabet");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

std::pair<Word, Scalar> Poly::min_term(const OrderSpec& order) const {
    if (is_zero()) throw std::domain_error("min_term of the zero polynomial");
    if (*order.alphabet() != *ctx_.alphabet)
        throw std::invalid_argument("order over a different alphabet");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.compare(it->first, best->first) < 0) best = it;
    return {best->first, best->second};
}

Poly Poly::make_monic(const OrderSpec& order, LeadMode mode) const {
    auto [w, c] = lead_term(order, mode);
    if (c == 1) return *this;
    return scaled(ctx_.field.inv(c));
}

Poly Poly::truncated(unsigned long bound, BoundMode mode) const {
    Poly r(ctx_);
    for (const auto& [w, c] : terms_) {
        unsigned long k = mode == BoundMode::ByLength ? w.length() : w.weight(*ctx_.alphabet);
        if (k < bound) r.terms_.emplace(w, c);
    }
    return r;
}

std::size_t Poly::min_term_length() const {
    std::size_t m = 0;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first || w.length() < m) m = w.length();
        first = false;
    }
    return m;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        std::string cs = Field::to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            if (neg) { s += "-"; cs = cs.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        if (w.is_one()) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += w.str(*ctx_.alphabet);
        }
    }
    return s;
}

TruncatedPoly truncate(const Poly& f, unsigned long bound, BoundMode mode) {
    if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
    return {f.truncated(bound, mode), bound, mode};
}

static void check_trunc_compatible(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.bound != b.bound || a.mode != b.mode)
        throw std::invalid_argument("truncated polynomials with different bounds");
}

TruncatedPoly mul(const TruncatedPoly& a, const TruncatedPoly& b) {
    check_trunc_compatible(a, b);
    return {(a.poly * b.poly).truncated(a.bound, a.mode), a.bound, a.mode};
}

TruncatedPoly add(const TruncatedPoly& a, const TruncatedPoly& b) {
    check_trunc_compatible(a, b);
    return {a.poly + b.poly, a.bound, a.mode};
}

}  // namespace gsb
