#pragma once

#include <cstddef>
#include <vector>

#include "elena/types.hpp"

namespace elena {

/// Builds the tree with spine nodes s1..s{k+1} (k = #blocks, s1 the root):
/// the children of s_i are the chains of block i, in order, with s_{i+1}
/// appended last. s_{k+1} is a leaf.
PlantedPlaneTree word_to_tree(const ElenaWord& w);

/// True iff every non-last child subtree hanging off the rightmost branch
/// is a chain (each node with at most one child).
bool is_elena_shape(const PlantedPlaneTree& t);

/// Exact inverse of word_to_tree. Throws NotElenaShape otherwise.
ElenaWord tree_to_word(const PlantedPlaneTree& t);

/// tree_to_dyck(word_to_tree(w)); the result is always nondecreasing.
DyckPath word_to_dyck(const ElenaWord& w);

/// tree_to_word(dyck_to_tree(p)); requires is_nondecreasing(p),
/// throws NotNondecreasing otherwise.
ElenaWord dyck_to_word(const DyckPath& p);

inline constexpr std::size_t kDefaultWordEnumLimit = 16;

/// Every word of the given size exactly once, sorted by token rendering.
std::vector<ElenaWord> enumerate_elenas(std::size_t n,
                                        std::size_t limit = kDefaultWordEnumLimit);

/// Exact count via a_n = 3 a_{n-1} - a_{n-2}, a_1 = a_2 = 1.
/// Equals F_{2n-3} for n >= 2.
BigInt count_elenas(std::size_t n);

} // namespace elena
