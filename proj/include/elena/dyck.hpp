#pragma once

#include <cstddef>
#include <vector>

#include "elena/types.hpp"

namespace elena {

/// Height after each step; last entry is 0 for any valid path.
std::vector<int> altitude_profile(const DyckPath& p);

/// Altitudes of the Down-then-Up local minima, left to right.
/// Endpoints never count.
std::vector<int> valleys(const DyckPath& p);

/// True iff the valley altitudes never decrease. Paths with at most one
/// valley qualify trivially.
bool is_nondecreasing(const DyckPath& p);

/// Glove bijection: p = (U w1 D)(U w2 D)...(U wk D) becomes a root whose
/// children are the images of w1..wk in reading order.
PlantedPlaneTree dyck_to_tree(const DyckPath& p);

/// Inverse of dyck_to_tree; the result has length 2 * (size - 1).
DyckPath tree_to_dyck(const PlantedPlaneTree& t);

inline constexpr std::size_t kDefaultDyckEnumLimit = 12;

/// All Dyck paths of length 2n, each once, in lexicographic step order
/// with U < D. Count is Catalan(n). Throws LimitExceeded past the limit.
std::vector<DyckPath> enumerate_dyck_paths(std::size_t n,
                                           std::size_t limit = kDefaultDyckEnumLimit);

} // namespace elena
