#pragma once

#include "detstrat/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace detstrat {

struct VerifyReport {
    std::size_t spaces_checked = 0;
    std::size_t cells_checked = 0;
    // Description of the first disagreement, if any.
    std::optional<std::string> first_failure;

    bool ok() const { return !first_failure; }
};

// Every space of the family up to size max_n:
//   General    1 <= n <= m <= max_n
//   Symmetric  1 <= n <= max_n
//   Skew       2 <= n <= max_n
std::vector<SpaceSpec> spaces_up_to(Family family, int max_n);

// For each space: enumerated vs closed de Rham generating functions for
// every stratum, the Euler obstructions recovered from enumerated chi
// against the closed form, and the index identity on the closed forms.
// Stops at the first failing cell.
VerifyReport verify_family(Family family, int max_n);

}  // namespace detstrat
