#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gsb {

struct Letter {
    std::string name;
    unsigned weight = 1;
};

/// Finite generator set. Letters carry positive integer weights; a weight of 1
/// everywhere recovers plain word length.
class Alphabet {
public:
    explicit Alphabet(std::vector<Letter> letters);

    std::size_t size() const { return letters_.size(); }
    const Letter& letter(std::size_t i) const { return letters_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Alphabet& o) const;
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<Letter> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A word in the free monoid: a finite sequence of letter indices.
/// The empty sequence is the identity word 1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> letters) : ls_(std::move(letters)) {}

    static Word one() { return Word(); }
    static Word single(std::size_t letter) { return Word({static_cast<std::uint8_t>(letter)}); }

    std::size_t length() const { return ls_.size(); }
    bool is_one() const { return ls_.empty(); }
    std::uint8_t at(std::size_t i) const { return ls_[i]; }
    const std::vector<std::uint8_t>& letters() const { return ls_; }

    unsigned long weight(const Alphabet& a) const;

    Word concat(const Word& o) const;
    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(ls_.size() - len, len); }

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator!=(const Word& o) const { return ls_ != o.ls_; }

    std::string str(const Alphabet& a) const;

private:
    std::vector<std::uint8_t> ls_;
};

Word operator*(const Word& a, const Word& b);

/// Canonical (order-independent) comparison used for deterministic storage:
/// by length, then by letter indices.
struct WordKeyLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.letters() < b.letters();
    }
};

enum class OrderKind { DegLex, Lex, ThetaLex };

std::string to_string(OrderKind k);

/// A total order on words: deg-lex, pure lex, or theta-lex (compare by a
/// weight homomorphism first, lexicographically by letter precedence on ties).
/// Deg-lex is theta-lex with all weights 1. Pure lex is not admissible and is
/// provided for comparison and testing only.
class OrderSpec {
public:
    OrderSpec(OrderKind kind, AlphabetPtr alphabet,
              std::vector<std::size_t> precedence,           // letter indices, largest first
              std::vector<unsigned> theta_weights = {});     // theta-lex only

    static OrderSpec deg_lex(AlphabetPtr alphabet, std::vector<std::size_t> precedence);
    static OrderSpec lex(AlphabetPtr alphabet, std::vector<std::size_t> precedence);
    static OrderSpec theta_lex(AlphabetPtr alphabet, std::vector<std::size_t> precedence,
                               std::vector<unsigned> weights);

    OrderKind kind() const { return kind_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }
    const std::vector<unsigned>& theta_weights() const { return weights_; }

    /// Weight homomorphism: word length for deg-lex, weighted sum for theta-lex.
    unsigned long theta(const Word& w) const;

    /// -1 / 0 / +1; total, equal iff identical.
    int compare(const Word& u, const Word& v) const;
    bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

    /// True for deg-lex and theta-lex; false for pure lex.
    bool admissible_by_construction() const { return kind_ != OrderKind::Lex; }
    /// Every bounded-above set finite; holds for deg-lex and theta-lex
    /// (all weights >= 1).
    bool is_n_order() const { return kind_ != OrderKind::Lex; }

private:
    int lex_compare(const Word& u, const Word& v) const;

    OrderKind kind_;
    AlphabetPtr alphabet_;
    std::vector<std::size_t> precedence_;
    std::vector<std::size_t> rank_;  // rank_[letter] = position in precedence (0 = largest)
    std::vector<unsigned> weights_;
};

struct AdmissibilityViolation {
    std::string description;
};

struct AdmissibilityReport {
    bool passed = true;
    unsigned max_length = 0;
    std::vector<AdmissibilityViolation> violations;
};

/// Exhaustively checks 1 < m and two-sided translation invariance on all
/// words up to max_length.
AdmissibilityReport check_admissible(const OrderSpec& order, unsigned max_length);

enum class BoundMode { ByLength, ByWeight };

/// All words with length (resp. weight) <= bound, sorted by bound-mode key
/// then canonically. Throws if the result would exceed safety_cap words.
std::vector<Word> enumerate_words(const Alphabet& alphabet, unsigned long bound, BoundMode mode,
                                  std::size_t safety_cap = 8u << 20);

/// Start indices of every occurrence of pattern as a factor of w.
std::vector<std::size_t> find_factor_occurrences(const Word& w, const Word& pattern);

bool has_factor(const Word& w, const Word& pattern);

}  // namespace gsb
