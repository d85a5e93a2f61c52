#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace astt::ast {

using NodeId = int;
inline constexpr NodeId kNoParent = -1;

/// One node of an abstract syntax tree. Ids are assigned in pre-order by
/// build_tree, so id 0 is always the root and a subtree occupies a
/// contiguous id range.
struct AstNode {
  NodeId id = 0;
  std::string kind;
  std::optional<std::string> value;
  std::vector<NodeId> children;
  NodeId parent = kNoParent;
};

/// Immutable rooted ordered tree. Safe for concurrent reads once built.
class AstTree {
 public:
  int n() const { return static_cast<int>(nodes_.size()); }
  const AstNode& node(NodeId id) const { return nodes_.at(check(id)); }
  const std::vector<AstNode>& nodes() const { return nodes_; }
  NodeId root() const { return 0; }

  int depth(NodeId id) const { return depth_[check(id)]; }
  int subtree_size(NodeId id) const { return subtree_size_[check(id)]; }

  /// Index of `id` within its parent's children list; 0 for the root.
  int child_index(NodeId id) const { return child_index_[check(id)]; }

  bool is_leaf(NodeId id) const { return node(id).children.empty(); }

  /// Surface form used by the linearizers: "kind" or "kind:value".
  std::string label(NodeId id) const;

  bool operator==(const AstTree& other) const;

 private:
  std::size_t check(NodeId id) const;

  std::vector<AstNode> nodes_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
  std::vector<int> child_index_;

  friend AstTree build_tree(const std::vector<struct RawNode>& raw);
};

/// Builder input: node order and ids are arbitrary, children refer to
/// positions in the raw list.
struct RawNode {
  std::string kind;
  std::optional<std::string> value;
  std::vector<int> children;
};

/// Validates the raw node list and produces a tree with pre-order ids and
/// computed depths. Throws CycleError, ForestError or DanglingChildError.
AstTree build_tree(const std::vector<RawNode>& raw);

/// Nested JSON schema: {"kind": str, "value"?: str, "children"?: [node...]}.
AstTree from_json(const std::string& text);
std::string to_json(const AstTree& tree);

/// Strict ancestor test: true iff a lies on the root-to-b path and a != b.
bool is_ancestor(const AstTree& tree, NodeId a, NodeId b);

/// Deterministic random tree with exactly n nodes, each with at most
/// max_branch children. Used as the property-test generator.
AstTree random_tree(std::uint64_t seed, int n, int max_branch);

}  // namespace astt::ast
