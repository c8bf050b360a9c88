#pragma once

#include <vector>

#include "ramanujan/suite.hpp"

namespace ramanujan::harness::detail {

// Combinatorial identities that need more than one module.
std::vector<IdentitySpec> combinatorial_checks();

}  // namespace ramanujan::harness::detail
