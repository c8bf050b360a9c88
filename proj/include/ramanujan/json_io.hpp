#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ramanujan/forests.hpp"
#include "ramanujan/half_mobile.hpp"
#include "ramanujan/permutation.hpp"
#include "ramanujan/plane_tree.hpp"

namespace ramanujan::io {

// Malformed input.  The message names the byte offset for syntax errors
// and the JSON path (e.g. "/children/2/label") for structural ones.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::json parse_text(const std::string& text);
nlohmann::json read_file(const std::string& path);

// {"label": int, "children": [tree, ...]}
nlohmann::json tree_to_json(const trees::PlaneTree& tree);
trees::PlaneTree tree_from_json(const nlohmann::json& j);

// {"kind":"white","label":n,"children":[...]} | {"kind":"black","children":[...]};
// a forest is {"components":[...]} and is validated on input.
nlohmann::json hm_to_json(const halfmobile::HalfMobileForest& forest);
halfmobile::HalfMobileForest hm_from_json(const nlohmann::json& j);

// {"components":[tree, ...]}
nlohmann::json forest_to_json(const forests::RootedPlaneForest& forest);
forests::RootedPlaneForest forest_from_json(const nlohmann::json& j);

// One-line notation as an integer array.
nlohmann::json permutation_to_json(const bijections::Permutation& p);
bijections::Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace ramanujan::io
