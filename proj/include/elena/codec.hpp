#pragma once

#include <string>
#include <string_view>

#include "elena/types.hpp"

namespace elena {

// Dyck paths: canonical alphabet "UD"; "()" accepted on input, never mixed.
DyckPath parse_dyck(std::string_view text);
std::string render_dyck(const DyckPath& p);

// Trees: balanced-parentheses encoding, "(" + children + ")".
PlantedPlaneTree parse_tree(std::string_view text);
std::string render_tree(const PlantedPlaneTree& t);

// Elena words: whitespace-separated tokens `a` and `p<k>` (k >= 1),
// matching (a p*)* a.
ElenaWord parse_elena_word(std::string_view text);
std::string render_elena_word(const ElenaWord& w);

// Deterministic JSON object with the fixed field names; big integers are
// written in full decimal, never scientific notation.
std::string render_stat_record_json(const StatRecord& r);

} // namespace elena
