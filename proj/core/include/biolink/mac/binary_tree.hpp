#pragma once

#include <cstdint>

namespace biolink::mac {

/// Mean reader iterations to single out one of n motes by binary-tree
/// splitting: log(n)/log(2) + 1. Throws DomainError for n == 0.
double binary_tree_iterations(std::uint64_t n);

}  // namespace biolink::mac
