#pragma once

#include <string>
#include <vector>

namespace gsb {

/// A presentation shipped with the library, embedded verbatim; the same
/// bytes live under data/presentations/.
struct BundledExample {
    std::string name;
    std::string summary;
    std::string expected;  // certified-residually-nilpotent | gr1-rank-1 | unsupported-order
    bool unsupported_order = false;
    std::string text;
};

const std::vector<BundledExample>& bundled_examples();
const BundledExample* find_bundled(const std::string& name);

}  // namespace gsb
