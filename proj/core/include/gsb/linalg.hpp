#pragma once

#include <map>

#include "gsb/poly.hpp"

namespace gsb {

/// Incremental exact row space over word-indexed sparse vectors. Pivot of a
/// row is its greatest word under the canonical key, so insertion order does
/// not affect the resulting rank.
class RowSpace {
public:
    explicit RowSpace(Field field) : field_(std::move(field)) {}

    /// Reduces v against the stored rows; returns the residue.
    Poly reduce(Poly v) const;

    /// Reduces and, if a nonzero residue remains, stores it. Returns true
    /// when the rank grew.
    bool insert(Poly v);

    /// True iff v lies in the current span.
    bool contains(const Poly& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return field_; }

private:
    Field field_;
    std::map<Word, Poly, WordKeyLess> rows_;  // pivot word -> monic row
};

}  // namespace gsb
