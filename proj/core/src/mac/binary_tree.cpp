#include "biolink/mac/binary_tree.hpp"

#include <cmath>

#include "biolink/common/errors.hpp"

namespace biolink::mac {

double binary_tree_iterations(std::uint64_t n) {
  if (n == 0) throw DomainError("binary_tree_iterations: n must be at least 1");
  return std::log2(static_cast<double>(n)) + 1.0;
}

}  // namespace biolink::mac
