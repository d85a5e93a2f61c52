#include "astt/ast.hpp"

#include <algorithm>
#include <stdexcept>

#include "astt/errors.hpp"
#include "astt/rng.hpp"
#include "json.hpp"

namespace astt::ast {

using ordered_json = nlohmann::ordered_json;

std::size_t AstTree::check(NodeId id) const {
  if (id < 0 || id >= n()) {
    throw std::out_of_range("node id " + std::to_string(id) +
                            " out of range [0," + std::to_string(n()) + ")");
  }
  return static_cast<std::size_t>(id);
}

std::string AstTree::label(NodeId id) const {
  const AstNode& nd = node(id);
  return nd.value ? nd.kind + ":" + *nd.value : nd.kind;
}

bool AstTree::operator==(const AstTree& other) const {
  if (n() != other.n()) return false;
  for (int i = 0; i < n(); ++i) {
    const AstNode& a = nodes_[i];
    const AstNode& b = other.nodes_[i];
    if (a.kind != b.kind || a.value != b.value || a.children != b.children ||
        a.parent != b.parent) {
      return false;
    }
  }
  return true;
}

AstTree build_tree(const std::vector<RawNode>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw ForestError("empty node list has no root");

  // Child references must be in range and each node may have one parent.
  std::vector<int> in_degree(raw.size(), 0);
  for (int i = 0; i < n; ++i) {
    for (int c : raw[i].children) {
      if (c < 0 || c >= n) {
        throw DanglingChildError("node " + std::to_string(i) +
                                 " lists missing child " + std::to_string(c));
      }
      if (++in_degree[c] > 1) {
        throw ForestError("node " + std::to_string(c) +
                          " has more than one parent");
      }
    }
  }

  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    if (in_degree[i] == 0) roots.push_back(i);
  }
  if (roots.empty()) {
    throw CycleError("no root: every node is its own ancestor");
  }
  if (roots.size() > 1) {
    throw ForestError("more than one root (" + std::to_string(roots.size()) +
                      " candidates)");
  }

  // Pre-order renumbering from the unique root. In-degrees are all <= 1
  // here, so revisiting a node means the walk looped back onto its own path.
  std::vector<int> order;
  order.reserve(raw.size());
  std::vector<int> new_id(raw.size(), -1);
  std::vector<char> on_path(raw.size(), 0);
  struct Frame {
    int node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{roots[0], 0}};
  new_id[static_cast<std::size_t>(roots[0])] = 0;
  order.push_back(roots[0]);
  on_path[static_cast<std::size_t>(roots[0])] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const RawNode& nd = raw[static_cast<std::size_t>(f.node)];
    if (f.next_child == nd.children.size()) {
      on_path[static_cast<std::size_t>(f.node)] = 0;
      stack.pop_back();
      continue;
    }
    int c = nd.children[f.next_child++];
    if (on_path[static_cast<std::size_t>(c)]) {
      throw CycleError("node " + std::to_string(c) + " is its own ancestor");
    }
    new_id[static_cast<std::size_t>(c)] = static_cast<int>(order.size());
    order.push_back(c);
    on_path[static_cast<std::size_t>(c)] = 1;
    stack.push_back({c, 0});
  }
  if (static_cast<int>(order.size()) != n) {
    throw ForestError("unreachable nodes: visited " +
                      std::to_string(order.size()) + " of " +
                      std::to_string(n));
  }

  AstTree tree;
  tree.nodes_.resize(raw.size());
  tree.depth_.assign(raw.size(), 0);
  tree.subtree_size_.assign(raw.size(), 1);
  tree.child_index_.assign(raw.size(), 0);
  for (int id = 0; id < n; ++id) {
    const RawNode& src = raw[static_cast<std::size_t>(order[id])];
    AstNode& dst = tree.nodes_[static_cast<std::size_t>(id)];
    dst.id = id;
    dst.kind = src.kind;
    dst.value = src.value;
    dst.children.clear();
    for (std::size_t ci = 0; ci < src.children.size(); ++ci) {
      int c = new_id[static_cast<std::size_t>(src.children[ci])];
      dst.children.push_back(c);
      tree.nodes_[static_cast<std::size_t>(c)].parent = id;
      tree.child_index_[static_cast<std::size_t>(c)] = static_cast<int>(ci);
    }
  }
  tree.nodes_[0].parent = kNoParent;
  for (int id = 1; id < n; ++id) {
    tree.depth_[static_cast<std::size_t>(id)] =
        tree.depth_[static_cast<std::size_t>(
            tree.nodes_[static_cast<std::size_t>(id)].parent)] +
        1;
  }
  // Pre-order ids make subtree sizes a reverse-scan accumulation.
  for (int id = n - 1; id >= 1; --id) {
    tree.subtree_size_[static_cast<std::size_t>(
        tree.nodes_[static_cast<std::size_t>(id)].parent)] +=
        tree.subtree_size_[static_cast<std::size_t>(id)];
  }
  return tree;
}

bool is_ancestor(const AstTree& tree, NodeId a, NodeId b) {
  // Pre-order ids put a subtree in the contiguous block
  // (id, id + subtree_size - 1]; range checks happen inside subtree_size.
  int size_a = tree.subtree_size(a);
  (void)tree.subtree_size(b);
  return a != b && a < b && b <= a + size_a - 1;
}

namespace {

void parse_node(const ordered_json& j, const std::string& path,
                std::vector<RawNode>& out, int my_index) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end()) throw SchemaError(path, "missing \"kind\"");
  if (!kind_it->is_string())
    throw SchemaError(path + ".kind", "expected a string");
  out[static_cast<std::size_t>(my_index)].kind =
      kind_it->get<std::string>();
  if (out[static_cast<std::size_t>(my_index)].kind.empty())
    throw SchemaError(path + ".kind", "must be non-empty");

  auto value_it = j.find("value");
  if (value_it != j.end()) {
    if (!value_it->is_string())
      throw SchemaError(path + ".value", "expected a string");
    out[static_cast<std::size_t>(my_index)].value =
        value_it->get<std::string>();
  }

  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "kind" && it.key() != "value" && it.key() != "children")
      throw SchemaError(path + "." + it.key(), "unknown key");
  }

  auto children_it = j.find("children");
  if (children_it == j.end()) return;
  if (!children_it->is_array())
    throw SchemaError(path + ".children", "expected an array");
  for (std::size_t i = 0; i < children_it->size(); ++i) {
    int child_index = static_cast<int>(out.size());
    out[static_cast<std::size_t>(my_index)].children.push_back(child_index);
    out.emplace_back();
    parse_node((*children_it)[i], path + ".children[" + std::to_string(i) + "]",
               out, child_index);
  }
}

ordered_json node_to_json(const AstTree& tree, NodeId id) {
  const AstNode& nd = tree.node(id);
  ordered_json j;
  j["kind"] = nd.kind;
  if (nd.value) j["value"] = *nd.value;
  ordered_json children = ordered_json::array();
  for (NodeId c : nd.children) children.push_back(node_to_json(tree, c));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

AstTree from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  std::vector<RawNode> raw;
  raw.emplace_back();
  parse_node(j, "$", raw, 0);
  return build_tree(raw);
}

std::string to_json(const AstTree& tree) {
  return node_to_json(tree, tree.root()).dump();
}

AstTree random_tree(std::uint64_t seed, int n, int max_branch) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (max_branch < 1)
    throw std::invalid_argument("random_tree: max_branch must be >= 1");
  Rng rng(seed);
  static const std::vector<std::string> kinds = {
      "Block",      "If",     "While",      "Assign",  "Call",
      "BinaryOp",   "Return", "VarDecl",    "ExprStmt", "Parameter",
      "Identifier", "IntLiteral"};

  std::vector<RawNode> raw(static_cast<std::size_t>(n));
  std::vector<int> open{0};  // nodes with spare child capacity
  for (int i = 1; i < n; ++i) {
    std::size_t slot = static_cast<std::size_t>(rng.below(open.size()));
    int parent = open[slot];
    raw[static_cast<std::size_t>(parent)].children.push_back(i);
    if (static_cast<int>(raw[static_cast<std::size_t>(parent)].children.size()) ==
        max_branch) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    raw[static_cast<std::size_t>(i)].kind = rng.pick(kinds);
    if (raw[static_cast<std::size_t>(i)].children.empty() && rng.chance(0.5)) {
      raw[static_cast<std::size_t>(i)].value =
          "v" + std::to_string(rng.below(20));
    }
  }
  return build_tree(raw);
}

}  // namespace astt::ast
