#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elena/errors.hpp"

namespace elena {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Step : unsigned char { Up, Down };

/// A balanced Up/Down lattice path: every prefix has #Up >= #Down and the
/// totals agree. The empty path is valid. Construction validates.
class DyckPath {
  public:
    DyckPath() = default;
    explicit DyckPath(std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    bool operator==(const DyckPath&) const = default;
    auto operator<=>(const DyckPath&) const = default;

  private:
    std::vector<Step> steps_;
};

/// Rooted tree with ordered children; a single node is the smallest instance.
struct PlantedPlaneTree {
    std::vector<PlantedPlaneTree> children;

    std::size_t size() const;
    /// Number of nodes on the longest root-to-leaf path; a single node has height 1.
    std::size_t height() const;

    bool operator==(const PlantedPlaneTree&) const = default;
};

/// A word of the language (a p*)* a, stored as the (a p*) factors.
/// The terminating bare `a` is implicit; zero blocks encodes the single node.
struct ElenaWord {
    std::vector<std::vector<int>> blocks; // each entry: path lengths, all >= 1

    std::size_t size() const;

    bool operator==(const ElenaWord&) const = default;
    auto operator<=>(const ElenaWord&) const = default;
};

/// Per-tree statistics. Depth of the root is 1, so path_length counts every
/// node at least once and equals psi exactly.
struct StatRecord {
    long long root_degree = 0;
    long long leaves = 0;
    long long height = 0;
    BigInt psi;         // sum over nodes of subtree sizes
    BigInt path_length; // sum over nodes of depths
    long long paths = 0;
    long long spine_nodes = 0;
    long long path_nodes = 0;
};

} // namespace elena
