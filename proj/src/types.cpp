#include "elena/types.hpp"

#include <numeric>

namespace elena {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    long long h = 0;
    for (Step s : steps_) {
        h += (s == Step::Up) ? 1 : -1;
        if (h < 0) throw NonBalanced("prefix drops below zero");
    }
    if (h != 0) throw NonBalanced("unequal numbers of Up and Down steps");
}

std::size_t PlantedPlaneTree::size() const {
    std::size_t s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

std::size_t PlantedPlaneTree::height() const {
    std::size_t best = 0;
    for (const auto& c : children) best = std::max(best, c.height());
    return best + 1;
}

std::size_t ElenaWord::size() const {
    std::size_t s = 1 + blocks.size();
    for (const auto& b : blocks)
        for (int m : b) s += static_cast<std::size_t>(m);
    return s;
}

} // namespace elena
