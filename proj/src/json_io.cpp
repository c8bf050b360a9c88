#include "ramanujan/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ramanujan::io {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

int label_of(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "label must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || v > (1 << 20)) fail(path, "label out of range");
  return static_cast<int>(v);
}

const json& children_of(const json& j, const std::string& path) {
  static const json empty = json::array();
  if (!j.contains("children")) return empty;
  const json& c = j.at("children");
  if (!c.is_array()) fail(path + "/children", "expected an array");
  return c;
}

int read_tree(const json& j, const std::string& path, std::map<int, std::vector<int>>& ch) {
  const int v = label_of(field(j, "label", path), path + "/label");
  const json& kids = children_of(j, path);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const int c = read_tree(kids[i], path + "/children/" + std::to_string(i), ch);
    ch[v].push_back(c);
  }
  return v;
}

json hm_node_to_json(const halfmobile::HmNode& n) {
  json j;
  j["kind"] = n.black ? "black" : "white";
  if (!n.black) j["label"] = n.label;
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(hm_node_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

halfmobile::HmNode hm_node_from_json(const json& j, const std::string& path) {
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + "/kind", "expected a string");
  halfmobile::HmNode n;
  const auto k = kind.get<std::string>();
  if (k == "black") {
    n.black = true;
    if (j.contains("label")) fail(path, "black vertices carry no label");
  } else if (k == "white") {
    n.label = label_of(field(j, "label", path), path + "/label");
  } else {
    fail(path + "/kind", "expected \"white\" or \"black\"");
  }
  const json& kids = children_of(j, path);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    n.children.push_back(hm_node_from_json(kids[i], path + "/children/" + std::to_string(i)));
  }
  return n;
}

const json& components_of(const json& j) {
  const json& c = field(j, "components", "");
  if (!c.is_array()) fail("/components", "expected an array");
  return c;
}

}  // namespace

json tree_to_json(const trees::PlaneTree& tree) {
  std::function<json(int)> rec = [&](int v) {
    json j;
    j["label"] = v;
    json kids = json::array();
    for (int c : tree.children(v)) kids.push_back(rec(c));
    j["children"] = std::move(kids);
    return j;
  };
  return rec(tree.root());
}

trees::PlaneTree tree_from_json(const json& j) {
  std::map<int, std::vector<int>> ch;
  const int root = read_tree(j, "", ch);
  try {
    return trees::PlaneTree(root, ch);
  } catch (const trees::TreeError& e) {
    throw InputError(std::string("invalid tree: ") + e.what());
  }
}

json hm_to_json(const halfmobile::HalfMobileForest& forest) {
  json comps = json::array();
  for (const auto& c : forest.components) comps.push_back(hm_node_to_json(c));
  return json{{"components", std::move(comps)}};
}

halfmobile::HalfMobileForest hm_from_json(const json& j) {
  halfmobile::HalfMobileForest f;
  const json& comps = components_of(j);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    f.components.push_back(hm_node_from_json(comps[i], "/components/" + std::to_string(i)));
  }
  std::function<void(const halfmobile::HmNode&)> count = [&](const halfmobile::HmNode& n) {
    if (!n.black) ++f.n;
    for (const auto& c : n.children) count(c);
  };
  for (const auto& c : f.components) count(c);
  if (auto err = halfmobile::validate(f)) throw InputError("invalid half-mobile forest: " + *err);
  return f;
}

json forest_to_json(const forests::RootedPlaneForest& forest) {
  json comps = json::array();
  for (const auto& c : forest.components) comps.push_back(tree_to_json(c));
  return json{{"components", std::move(comps)}};
}

forests::RootedPlaneForest forest_from_json(const json& j) {
  forests::RootedPlaneForest f;
  const json& comps = components_of(j);
  std::vector<int> seen;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::map<int, std::vector<int>> ch;
    const std::string path = "/components/" + std::to_string(i);
    const int root = read_tree(comps[i], path, ch);
    try {
      f.components.emplace_back(root, ch);
    } catch (const trees::TreeError& e) {
      fail(path, e.what());
    }
    const auto& l = f.components.back().labels();
    seen.insert(seen.end(), l.begin(), l.end());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) fail("/components", "label repeated");
  return f;
}

json permutation_to_json(const bijections::Permutation& p) { return p.word(); }

bijections::Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) fail("", "permutation must be an integer array");
  std::vector<int> w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail("/" + std::to_string(i), "expected an integer");
    w.push_back(j[i].get<int>());
  }
  try {
    return bijections::Permutation(std::move(w));
  } catch (const bijections::PermutationError& e) {
    throw InputError(std::string("invalid permutation: ") + e.what());
  }
}

}  // namespace ramanujan::io
