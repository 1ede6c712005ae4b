#include "gsb/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gsb {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("alphabet must be nonempty");
    if (letters_.size() > 250) throw std::invalid_argument("alphabet too large");
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (!is_identifier(l.name))
            throw std::invalid_argument("letter name is not an identifier: '" + l.name + "'");
        if (!seen.insert(l.name).second)
            throw std::invalid_argument("duplicate letter name: '" + l.name + "'");
        if (l.weight < 1) throw std::invalid_argument("letter weight must be >= 1: " + l.name);
    }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].name == name) return i;
    return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& o) const {
    if (letters_.size() != o.letters_.size()) return false;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].name != o.letters_[i].name || letters_[i].weight != o.letters_[i].weight)
            return false;
    return true;
}

unsigned long Word::weight(const Alphabet& a) const {
    unsigned long w = 0;
    for (auto l : ls_) w += a.letter(l).weight;
    return w;
}

Word Word::concat(const Word& o) const {
    std::vector<std::uint8_t> r = ls_;
    r.insert(r.end(), o.ls_.begin(), o.ls_.end());
    return Word(std::move(r));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > ls_.size()) throw std::out_of_range("subword out of range");
    return Word(std::vector<std::uint8_t>(ls_.begin() + pos, ls_.begin() + pos + len));
}

std::string Word::str(const Alphabet& a) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < ls_.size(); ++i) {
        if (i) s += "*";
        s += a.letter(ls_[i]).name;
    }
    return s;
}

Word operator*(const Word& a, const Word& b) { return a.concat(b); }

std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::DegLex: return "deg-lex";
        case OrderKind::Lex: return "lex";
        case OrderKind::ThetaLex: return "theta-lex";
    }
    return "?";
}

OrderSpec::OrderSpec(OrderKind kind, AlphabetPtr alphabet, std::vector<std::size_t> precedence,
                     std::vector<unsigned> theta_weights)
    : kind_(kind), alphabet_(std::move(alphabet)), precedence_(std::move(precedence)),
      weights_(std::move(theta_weights)) {
    if (!alphabet_) throw std::invalid_argument("order requires an alphabet");
    const std::size_t n = alphabet_->size();
    if (precedence_.size() != n) throw std::invalid_argument("precedence must be a permutation of the letters");
    std::vector<bool> hit(n, false);
    rank_.assign(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t l = precedence_[pos];
        if (l >= n || hit[l]) throw std::invalid_argument("precedence must be a permutation of the letters");
        hit[l] = true;
        rank_[l] = pos;
    }
    if (kind_ == OrderKind::ThetaLex) {
        if (weights_.size() != n) throw std::invalid_argument("theta-lex requires one weight per letter");
        for (unsigned w : weights_)
            if (w < 1) throw std::invalid_argument("theta-lex weights must be >= 1");
    } else if (!weights_.empty()) {
        throw std::invalid_argument("weights are only meaningful for theta-lex");
    }
}

OrderSpec OrderSpec::deg_lex(AlphabetPtr a, std::vector<std::size_t> prec) {
    return OrderSpec(OrderKind::DegLex, std::move(a), std::move(prec));
}
OrderSpec OrderSpec::lex(AlphabetPtr a, std::vector<std::size_t> prec) {
    return OrderSpec(OrderKind::Lex, std::move(a), std::move(prec));
}
OrderSpec OrderSpec::theta_lex(AlphabetPtr a, std::vector<std::size_t> prec, std::vector<unsigned> w) {
    return OrderSpec(OrderKind::ThetaLex, std::move(a), std::move(prec), std::move(w));
}

unsigned long OrderSpec::theta(const Word& w) const {
    if (kind_ != OrderKind::ThetaLex) return w.length();
    unsigned long t = 0;
    for (auto l : w.letters()) t += weights_[l];
    return t;
}

int OrderSpec::lex_compare(const Word& u, const Word& v) const {
    const std::size_t n = std::min(u.length(), v.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (u.at(i) == v.at(i)) continue;
        // smaller rank = higher precedence = larger letter
        return rank_[u.at(i)] < rank_[v.at(i)] ? 1 : -1;
    }
    if (u.length() == v.length()) return 0;
    return u.length() < v.length() ? -1 : 1;
}

int OrderSpec::compare(const Word& u, const Word& v) const {
    if (kind_ != OrderKind::Lex) {
        unsigned long tu = theta(u), tv = theta(v);
        if (tu != tv) return tu < tv ? -1 : 1;
    }
    return lex_compare(u, v);
}

AdmissibilityReport check_admissible(const OrderSpec& order, unsigned max_length) {
    if (max_length < 2) throw std::invalid_argument("max_length must be >= 2");
    AdmissibilityReport rep;
    rep.max_length = max_length;
    const Alphabet& a = *order.alphabet();
    auto words = enumerate_words(a, max_length, BoundMode::ByLength);
    auto fail = [&](const std::string& d) {
        rep.passed = false;
        if (rep.violations.size() < 16) rep.violations.push_back({d});
    };
    for (const auto& w : words) {
        if (!w.is_one() && order.compare(Word::one(), w) >= 0)
            fail("1 is not below " + w.str(a));
    }
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (order.compare(u, v) >= 0) continue;
            for (const auto& l : words) {
                for (const auto& r : words) {
                    if (l.length() + r.length() + std::max(u.length(), v.length()) > max_length)
                        continue;
                    if (order.compare(l * u * r, l * v * r) >= 0)
                        fail(u.str(a) + " < " + v.str(a) + " but " + (l * u * r).str(a) +
                             " >= " + (l * v * r).str(a));
                }
            }
        }
    }
    return rep;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, unsigned long bound, BoundMode mode,
                                  std::size_t safety_cap) {
    unsigned min_w = alphabet.letter(0).weight;
    for (std::size_t i = 1; i < alphabet.size(); ++i)
        min_w = std::min(min_w, alphabet.letter(i).weight);
    std::vector<Word> out;
    std::vector<Word> layer{Word::one()};
    auto key = [&](const Word& w) {
        return mode == BoundMode::ByLength ? static_cast<unsigned long>(w.length()) : w.weight(alphabet);
    };
    if (key(Word::one()) <= bound) out.push_back(Word::one());
    // grow by length; weight never decreases when appending, so layers past
    // bound/min_w letters cannot contribute in by-weight mode either
    while (!layer.empty()) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (std::size_t l = 0; l < alphabet.size(); ++l) {
                Word e = w * Word::single(l);
                unsigned long k = mode == BoundMode::ByLength ? e.length() : e.weight(alphabet);
                if (k > bound) continue;
                if (out.size() + next.size() >= safety_cap)
                    throw std::runtime_error("enumerate_words: safety cap exceeded");
                next.push_back(std::move(e));
            }
        }
        for (auto& w : next) out.push_back(w);
        layer = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(), [&](const Word& x, const Word& y) {
        unsigned long kx = key(x), ky = key(y);
        if (kx != ky) return kx < ky;
        return WordKeyLess{}(x, y);
    });
    return out;
}

std::vector<std::size_t> find_factor_occurrences(const Word& w, const Word& pattern) {
    if (pattern.is_one()) throw std::invalid_argument("factor pattern must be nonempty");
    std::vector<std::size_t> out;
    if (pattern.length() > w.length()) return out;
    for (std::size_t i = 0; i + pattern.length() <= w.length(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.length(); ++j)
            if (w.at(i + j) != pattern.at(j)) { ok = false; break; }
        if (ok) out.push_back(i);
    }
    return out;
}

bool has_factor(const Word& w, const Word& pattern) {
    if (pattern.is_one() || pattern.length() > w.length()) return false;
    for (std::size_t i = 0; i + pattern.length() <= w.length(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.length(); ++j)
            if (w.at(i + j) != pattern.at(j)) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

}  // namespace gsb
