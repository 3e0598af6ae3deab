#pragma once

// 1-cut search forests are rootings of the underlying forest. NodeToRoot
// rotates the root with one of its children until v is the root, which just
// reverses the parent pointers along v's root path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "stt/types.hpp"
#include "stt/weights.hpp"

namespace stt {

template <MonoidWeight M = UnitWeight>
class OneCutForest {
 public:
  using weight_type = M;
  using value_type = typename M::value_type;

  static constexpr bool kWeighted = !std::is_empty_v<value_type>;

  OneCutForest() = default;
  explicit OneCutForest(std::size_t n) : parent_(n, kNone) {
    if constexpr (kWeighted) weight_.assign(n, M::identity());
  }

  std::size_t size() const { return parent_.size(); }
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::uint64_t rotations() const { return rotations_; }

  /// Makes v the root of its tree; costs one rotation per edge on its root
  /// path.
  void node_to_root(NodeId v) {
    NodeId prev = kNone;
    value_type carry = M::identity();
    for (NodeId x = v; x != kNone;) {
      const NodeId next = parent_[x];
      parent_[x] = prev;
      if constexpr (kWeighted) std::swap(weight_[x], carry);
      prev = x;
      x = next;
      if (x != kNone) ++rotations_;
    }
  }

  void link(NodeId u, NodeId v, const value_type& w = M::identity()) {
    expect(u != v, "link: self loop");
    node_to_root(u);
    node_to_root(v);
    expect(parent_[u] == kNone, "link: nodes are already connected");
    parent_[u] = v;
    if constexpr (kWeighted) weight_[u] = w;
  }

  void cut(NodeId u, NodeId v) {
    expect(u != v, "cut: self loop");
    node_to_root(u);
    node_to_root(v);
    expect(parent_[u] == v, "cut: edge does not exist");
    parent_[u] = kNone;
  }

  std::optional<value_type> compute_path_weight(NodeId u, NodeId v) {
    if (u == v) return M::identity();
    node_to_root(u);
    node_to_root(v);
    if (parent_[u] == kNone) return std::nullopt;
    value_type acc = M::identity();
    if constexpr (kWeighted)
      for (NodeId x = u; x != v; x = parent_[x]) acc = M::combine(acc, weight_[x]);
    return acc;
  }

  bool connected(NodeId u, NodeId v) { return compute_path_weight(u, v).has_value(); }

 private:
  std::vector<NodeId> parent_;
  std::vector<value_type> weight_;
  std::uint64_t rotations_ = 0;
};

}  // namespace stt
