#include "elena/height4.hpp"

namespace elena {

PlantedPlaneTree interpret_path(int m) {
    PlantedPlaneTree t;
    t.children.resize(static_cast<std::size_t>(m - 1));
    return t;
}

PlantedPlaneTree elena_to_height4(const ElenaWord& w) {
    PlantedPlaneTree root;
    for (const auto& block : w.blocks) {
        PlantedPlaneTree blockNode;
        for (int m : block) blockNode.children.push_back(interpret_path(m));
        root.children.push_back(std::move(blockNode));
    }
    return root;
}

ElenaWord height4_to_elena(const PlantedPlaneTree& t) {
    if (t.height() > 4)
        throw TooTall("tree has height " + std::to_string(t.height()));
    ElenaWord w;
    for (const auto& blockNode : t.children) {
        std::vector<int> block;
        for (const auto& pathNode : blockNode.children)
            block.push_back(static_cast<int>(pathNode.children.size()) + 1);
        w.blocks.push_back(std::move(block));
    }
    return w;
}

} // namespace elena
