#include "gsb/linalg.hpp"

namespace gsb {

Poly RowSpace::reduce(Poly v) const {
    while (!v.is_zero()) {
        const Word& piv = v.terms().rbegin()->first;
        auto it = rows_.find(piv);
        if (it == rows_.end()) break;
        Scalar c = v.terms().rbegin()->second;
        v = v - it->second.scaled(c);
    }
    return v;
}

bool RowSpace::insert(Poly v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    Word piv = v.terms().rbegin()->first;
    Scalar c = v.terms().rbegin()->second;
    rows_.emplace(std::move(piv), v.scaled(field_.inv(c)));
    return true;
}

}  // namespace gsb
