#pragma once

// Ground-truth forests: explicit adjacency lists for the unrooted interface
// and explicit parent pointers for the rooted one.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stt/types.hpp"
#include "stt/weights.hpp"

namespace stt {

template <MonoidWeight M = UnitWeight>
class NaiveForest {
 public:
  using weight_type = M;
  using value_type = typename M::value_type;

  NaiveForest() = default;
  explicit NaiveForest(std::size_t n) : adj_(n), seen_(n, 0), from_(n, kNone) {}

  std::size_t size() const { return adj_.size(); }
  std::uint64_t rotations() const { return 0; }

  void link(NodeId u, NodeId v, const value_type& w = M::identity()) {
    expect(u != v, "link: self loop");
    expect(!bfs(u, v), "link: nodes are already connected");
    adj_[u].push_back({v, w});
    adj_[v].push_back({u, w});
  }

  void cut(NodeId u, NodeId v) {
    expect(erase(u, v) && erase(v, u), "cut: edge does not exist");
  }

  std::optional<value_type> compute_path_weight(NodeId u, NodeId v) {
    if (u == v) return M::identity();
    if (!bfs(u, v)) return std::nullopt;
    value_type acc = M::identity();
    // Walk back from v, prepending, so the fold runs from u to v.
    for (NodeId x = v; x != u; x = from_[x]) acc = M::combine(weight(x, from_[x]), acc);
    return acc;
  }

  bool connected(NodeId u, NodeId v) { return u == v || bfs(u, v); }

  /// Edges of the u-v path in order from u, or empty if disconnected.
  std::vector<Edge> path_edges(NodeId u, NodeId v) {
    std::vector<Edge> out;
    if (u == v || !bfs(u, v)) return out;
    for (NodeId x = v; x != u; x = from_[x]) out.push_back(make_edge(x, from_[x]));
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (NodeId u = 0; u < adj_.size(); ++u)
      for (const auto& [v, w] : adj_[u])
        if (u < v) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
  }

  value_type weight(NodeId u, NodeId v) const {
    for (const auto& [x, w] : adj_[u])
      if (x == v) return w;
    throw PreconditionError("weight: edge does not exist");
  }

 private:
  bool erase(NodeId u, NodeId v) {
    auto& a = adj_[u];
    auto it = std::find_if(a.begin(), a.end(), [v](const auto& e) { return e.first == v; });
    if (it == a.end()) return false;
    a.erase(it);
    return true;
  }

  // Fills from_ with BFS parents for the component of u; true iff v is
  // reached.
  bool bfs(NodeId u, NodeId v) {
    if (++stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    queue_.clear();
    queue_.push_back(u);
    seen_[u] = stamp_;
    from_[u] = kNone;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const NodeId x = queue_[i];
      if (x == v) return true;
      for (const auto& [y, w] : adj_[x]) {
        if (seen_[y] == stamp_) continue;
        seen_[y] = stamp_;
        from_[y] = x;
        queue_.push_back(y);
      }
    }
    return false;
  }

  std::vector<std::vector<std::pair<NodeId, value_type>>> adj_;
  std::vector<std::uint32_t> seen_;
  std::vector<NodeId> from_;
  std::vector<NodeId> queue_;
  std::uint32_t stamp_ = 0;
};

class SimpleRooted {
 public:
  SimpleRooted() = default;
  explicit SimpleRooted(std::size_t n) : parent_(n, kNone), mark_(n, 0) {}

  std::size_t size() const { return parent_.size(); }
  std::uint64_t rotations() const { return 0; }
  NodeId parent(NodeId v) const { return parent_[v]; }

  NodeId find_root(NodeId v) const {
    while (parent_[v] != kNone) v = parent_[v];
    return v;
  }

  void link(NodeId u, NodeId v) {
    expect(u != v, "link: self loop");
    expect(parent_[u] == kNone, "link: node is not the root of its tree");
    expect(find_root(v) != u, "link: nodes are already connected");
    parent_[u] = v;
  }

  void cut(NodeId v) {
    expect(parent_[v] != kNone, "cut: node is the root of its tree");
    parent_[v] = kNone;
  }

  std::optional<NodeId> lca(NodeId u, NodeId v) {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    for (NodeId x = u; x != kNone; x = parent_[x]) mark_[x] = stamp_;
    for (NodeId x = v; x != kNone; x = parent_[x])
      if (mark_[x] == stamp_) return x;
    return std::nullopt;
  }

  void evert(NodeId v) {
    NodeId prev = kNone;
    for (NodeId x = v; x != kNone;) {
      const NodeId next = parent_[x];
      parent_[x] = prev;
      prev = x;
      x = next;
    }
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace stt
