// Budget-truncated well-founded trees with per-node intended heights, the
// even/odd node labelings, and descending-path enumeration.
//
// The real trees have countably many children per node; storage keeps
// `budget` children per successor node and the first `budget` fundamental
// sequence terms per limit node. intended_height records the ground truth,
// so truncation undershoot in the recursive height is detectable.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knead/ordinal.hpp"

namespace knead {

class TreeError : public std::runtime_error {
 public:
  explicit TreeError(const std::string& what) : std::runtime_error(what) {}
};

using NodeId = std::uint32_t;
inline constexpr NodeId kRootNode = 0;

class WFTree {
 public:
  // Recursive construction: height 0 is a bare root; a successor root gets
  // `budget` copies of the predecessor tree; a limit root gets one subtree
  // per fundamental-sequence term. node_cap bounds total storage.
  static WFTree build(const OrdinalCNF& alpha, std::uint32_t budget,
                      std::size_t node_cap = 5'000'000);

  struct Node {
    NodeId parent;
    std::vector<NodeId> children;
    OrdinalCNF intended_height;
    std::uint32_t depth;
  };

  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const;
  const OrdinalCNF& alpha() const { return alpha_; }
  std::uint32_t budget() const { return budget_; }

  // Child-index path from the root; empty path is the root.
  NodeId at_path(const std::vector<std::uint32_t>& path) const;
  std::vector<std::uint32_t> path_of(NodeId id) const;

  const OrdinalCNF& intended_height(NodeId id) const { return node(id).intended_height; }

  // Recursive height over stored children: leaves are 0, else
  // max(child+1). A lower bound for intended_height on truncations,
  // exact whenever alpha is finite.
  OrdinalCNF node_height(NodeId id) const;

  // Proper nodes (root excluded) in BFS order; the labeling order.
  const std::vector<NodeId>& bfs_order() const { return bfs_; }

 private:
  std::vector<Node> nodes_;
  std::vector<NodeId> bfs_;
  OrdinalCNF alpha_;
  std::uint32_t budget_ = 0;
};

enum class LabelParity { even, odd };

// Injective node -> natural labeling of the proper nodes: 2,4,6,... or
// 1,3,5,... in BFS order. Deterministic across runs.
class Labeling {
 public:
  Labeling(const WFTree& tree, LabelParity parity);

  LabelParity parity() const { return parity_; }
  std::uint64_t label_of(NodeId id) const;
  std::optional<NodeId> node_of(std::uint64_t label) const;

 private:
  LabelParity parity_;
  std::unordered_map<NodeId, std::uint64_t> fwd_;
  std::unordered_map<std::uint64_t, NodeId> rev_;
};

// The label tuple (phi(t_1), ..., phi(t_n)) along the root-to-node path.
struct PathLabel {
  std::vector<std::uint64_t> labels;
  NodeId end_node;
  bool operator==(const PathLabel&) const = default;
};

struct PathLabelList {
  std::vector<PathLabel> paths;
  bool truncated = false;  // fewer stored paths than requested
};

// Descending paths from the root as label tuples, ordered by depth then
// BFS; prefix-closed as a set. Each proper node identifies one path.
PathLabelList enumerate_path_labels(const WFTree& tree, const Labeling& lab,
                                    std::size_t count);

// intended_height of the node carrying label p; errors on unknown labels.
OrdinalCNF node_rank_of_label(const WFTree& tree, const Labeling& lab, std::uint64_t p);

// JSON: {"alpha": "...", "budget": b, "nodes": [{"path": [...], "height": "..."}]}
std::string tree_to_json(const WFTree& tree);

}  // namespace knead
