#include "knead/tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace knead {

namespace {

// Appends the subtree for `alpha` under `parent`, returning the new child.
NodeId grow(std::vector<WFTree::Node>& nodes, NodeId parent, const OrdinalCNF& alpha,
            std::uint32_t budget, std::size_t node_cap) {
  if (nodes.size() >= node_cap) {
    throw TreeError("tree construction exceeds node cap; lower the budget or alpha");
  }
  const NodeId id = static_cast<NodeId>(nodes.size());
  nodes.push_back({parent, {}, alpha, nodes[parent].depth + 1});
  if (alpha.is_zero()) return id;
  if (alpha.is_successor()) {
    const OrdinalCNF beta = alpha.predecessor();
    for (std::uint32_t i = 0; i < budget; ++i) {
      const NodeId c = grow(nodes, id, beta, budget, node_cap);
      nodes[id].children.push_back(c);
    }
  } else {
    for (std::uint32_t k = 1; k <= budget; ++k) {
      const NodeId c = grow(nodes, id, alpha.fundamental(k), budget, node_cap);
      nodes[id].children.push_back(c);
    }
  }
  return id;
}

}  // namespace

WFTree WFTree::build(const OrdinalCNF& alpha, std::uint32_t budget, std::size_t node_cap) {
  if (budget == 0) throw TreeError("budget must be at least 1");
  WFTree t;
  t.alpha_ = alpha;
  t.budget_ = budget;
  t.nodes_.push_back({kRootNode, {}, alpha, 0});
  if (!alpha.is_zero()) {
    if (alpha.is_successor()) {
      const OrdinalCNF beta = alpha.predecessor();
      for (std::uint32_t i = 0; i < budget; ++i) {
        const NodeId c = grow(t.nodes_, kRootNode, beta, budget, node_cap);
        t.nodes_[kRootNode].children.push_back(c);
      }
    } else {
      for (std::uint32_t k = 1; k <= budget; ++k) {
        const NodeId c = grow(t.nodes_, kRootNode, alpha.fundamental(k), budget, node_cap);
        t.nodes_[kRootNode].children.push_back(c);
      }
    }
  }
  // Proper nodes in BFS order.
  std::deque<NodeId> q;
  for (NodeId c : t.nodes_[kRootNode].children) q.push_back(c);
  while (!q.empty()) {
    const NodeId id = q.front();
    q.pop_front();
    t.bfs_.push_back(id);
    for (NodeId c : t.nodes_[id].children) q.push_back(c);
  }
  return t;
}

const WFTree::Node& WFTree::node(NodeId id) const {
  if (id >= nodes_.size()) throw TreeError("unknown node id");
  return nodes_[id];
}

NodeId WFTree::at_path(const std::vector<std::uint32_t>& path) const {
  NodeId id = kRootNode;
  for (std::uint32_t step : path) {
    const Node& n = node(id);
    if (step >= n.children.size()) throw TreeError("path leaves the stored tree");
    id = n.children[step];
  }
  return id;
}

std::vector<std::uint32_t> WFTree::path_of(NodeId id) const {
  std::vector<std::uint32_t> out;
  while (id != kRootNode) {
    const NodeId p = node(id).parent;
    const auto& siblings = node(p).children;
    const auto it = std::find(siblings.begin(), siblings.end(), id);
    out.push_back(static_cast<std::uint32_t>(it - siblings.begin()));
    id = p;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

OrdinalCNF WFTree::node_height(NodeId id) const {
  const Node& n = node(id);
  OrdinalCNF h;
  for (NodeId c : n.children) h = ordinal_max(h, node_height(c).successor());
  return h;
}

Labeling::Labeling(const WFTree& tree, LabelParity parity) : parity_(parity) {
  std::uint64_t next = (parity == LabelParity::even) ? 2 : 1;
  for (NodeId id : tree.bfs_order()) {
    fwd_[id] = next;
    rev_[next] = id;
    next += 2;
  }
}

std::uint64_t Labeling::label_of(NodeId id) const {
  const auto it = fwd_.find(id);
  if (it == fwd_.end()) throw TreeError("node is not labeled (root or foreign node)");
  return it->second;
}

std::optional<NodeId> Labeling::node_of(std::uint64_t label) const {
  const auto it = rev_.find(label);
  if (it == rev_.end()) return std::nullopt;
  return it->second;
}

PathLabelList enumerate_path_labels(const WFTree& tree, const Labeling& lab,
                                    std::size_t count) {
  if (count == 0) throw TreeError("path enumeration needs count >= 1");
  // BFS order is already depth-then-breadth.
  PathLabelList out;
  for (NodeId id : tree.bfs_order()) {
    if (out.paths.size() == count) return out;
    PathLabel pl;
    pl.end_node = id;
    NodeId cur = id;
    while (cur != kRootNode) {
      pl.labels.push_back(lab.label_of(cur));
      cur = tree.node(cur).parent;
    }
    std::reverse(pl.labels.begin(), pl.labels.end());
    out.paths.push_back(std::move(pl));
  }
  out.truncated = out.paths.size() < count;
  return out;
}

OrdinalCNF node_rank_of_label(const WFTree& tree, const Labeling& lab, std::uint64_t p) {
  const auto id = lab.node_of(p);
  if (!id) throw TreeError("label " + std::to_string(p) + " is not assigned");
  return tree.intended_height(*id);
}

std::string tree_to_json(const WFTree& tree) {
  std::ostringstream os;
  os << "{\"alpha\":\"" << tree.alpha().to_string() << "\",\"budget\":" << tree.budget()
     << ",\"nodes\":[";
  bool first = true;
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (!first) os << ',';
    first = false;
    os << "{\"path\":[";
    const auto path = tree.path_of(id);
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) os << ',';
      os << path[i];
    }
    os << "],\"height\":\"" << tree.intended_height(id).to_string() << "\"}";
  }
  os << "]}";
  return os.str();
}

}  // namespace knead
