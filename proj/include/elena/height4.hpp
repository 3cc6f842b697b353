#pragma once

#include "elena/types.hpp"

namespace elena {

/// A chain of m nodes reinterpreted as a root with m-1 leaf children.
PlantedPlaneTree interpret_path(int m);

/// The terminating `a` becomes the root; each (a p*) block becomes one child
/// of it, whose own children are interpret_path of the block's lengths.
/// Size is preserved and the image has height <= 4.
PlantedPlaneTree elena_to_height4(const ElenaWord& w);

/// Exact inverse on trees of height <= 4; throws TooTall above that.
ElenaWord height4_to_elena(const PlantedPlaneTree& t);

} // namespace elena
