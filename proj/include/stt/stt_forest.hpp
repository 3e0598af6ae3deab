#pragma once

// A forest of 2-cut search trees on trees.
//
// Every node stores three handles: its parent, its direct separator child
// and its indirect separator child. A node v is a separator if its subtree
// has two boundary vertices in the underlying tree; it is direct if those are
// exactly its parent and grandparent. The three handles are enough to
// recover the underlying forest (see validate.hpp), so no edge list is kept.

#include <cstddef>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "stt/types.hpp"

namespace stt {

/// State of a rotation at `v`, captured before any field changes.
struct RotationContext {
  NodeId v;
  NodeId p;
  NodeId g;  // old parent of p, kNone if p was a root
  NodeId c;  // old direct separator child of v, moves below p
  bool v_direct;
  bool v_separator;
  bool p_separator;

  bool p_was_root() const { return g == kNone; }
};

/// Satellite data hooks. A data maintainer is notified once per rotation
/// (before the structural update) and on every attach/detach. It may update
/// per-node annotations but never the tree structure.
struct NoData {
  void resize(std::size_t) {}
  void on_rotate(const RotationContext&) {}
  template <class... Args>
  void on_attach(NodeId, NodeId, const Args&...) {}
  void on_detach(NodeId) {}
};

/// Runs several maintainers in registration order.
template <class... Parts>
class DataList {
 public:
  void resize(std::size_t n) {
    std::apply([n](auto&... d) { (d.resize(n), ...); }, parts_);
  }
  void on_rotate(const RotationContext& ctx) {
    std::apply([&ctx](auto&... d) { (d.on_rotate(ctx), ...); }, parts_);
  }
  template <class... Args>
  void on_attach(NodeId u, NodeId v, const Args&... args) {
    std::apply([&](auto&... d) { (attach_one(d, u, v, args...), ...); },
               parts_);
  }
  void on_detach(NodeId u) {
    std::apply([u](auto&... d) { (d.on_detach(u), ...); }, parts_);
  }

  template <std::size_t I>
  auto& get() { return std::get<I>(parts_); }
  template <std::size_t I>
  const auto& get() const { return std::get<I>(parts_); }

 private:
  template <class D, class... Args>
  static void attach_one(D& d, NodeId u, NodeId v, const Args&... args) {
    if constexpr (requires { d.on_attach(u, v, args...); })
      d.on_attach(u, v, args...);
    else
      d.on_attach(u, v);
  }

  std::tuple<Parts...> parts_;
};

template <class Data = NoData>
class SttForest {
 public:
  using data_type = Data;

  SttForest() = default;
  explicit SttForest(std::size_t n) : nodes_(n) {
    data_.resize(n);
    scratch_.reserve(n);
  }

  std::size_t size() const { return nodes_.size(); }

  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  NodeId dsep_child(NodeId v) const { return nodes_[v].dsep; }
  NodeId isep_child(NodeId v) const { return nodes_[v].isep; }
  bool is_root(NodeId v) const { return nodes_[v].parent == kNone; }

  /// `p` must be the parent of `v`.
  bool is_separator_hint(NodeId v, NodeId p) const {
    return nodes_[p].dsep == v || nodes_[p].isep == v;
  }
  bool is_separator(NodeId v) const {
    const NodeId p = parent(v);
    return p != kNone && is_separator_hint(v, p);
  }
  bool is_direct_separator(NodeId v) const {
    const NodeId p = parent(v);
    return p != kNone && nodes_[p].dsep == v;
  }
  bool is_indirect_separator(NodeId v) const {
    const NodeId p = parent(v);
    return p != kNone && nodes_[p].isep == v;
  }

  /// A rotation at v keeps the forest 2-cut unless v is 1-cut and its
  /// parent is a separator.
  bool can_rotate(NodeId v) const {
    const NodeId p = parent(v);
    expect(p != kNone, "can_rotate: node is a root");
    return can_rotate_hint(v, p);
  }
  bool can_rotate_hint(NodeId v, NodeId p) const {
    return is_separator_hint(v, p) || !is_separator(p);
  }

  void rotate(NodeId v);

  /// Makes root `u` a child of `v` (the final step of a link). Both must be
  /// roots of different trees.
  template <class... Args>
  void attach(NodeId u, NodeId v, const Args&... args) {
    expect(nodes_[u].parent == kNone, "attach: node is not a root");
    nodes_[u].parent = v;
    data_.on_attach(u, v, args...);
  }

  /// Detaches the 1-cut child `u` from its parent (the final step of a cut).
  void detach(NodeId u) {
    const NodeId p = nodes_[u].parent;
    expect(p != kNone, "detach: node is a root");
    expect(!is_separator_hint(u, p), "detach: node is a separator");
    nodes_[u].parent = kNone;
    data_.on_detach(u);
  }

  NodeId root_of(NodeId v) const {
    while (nodes_[v].parent != kNone) v = nodes_[v].parent;
    return v;
  }
  std::size_t depth(NodeId v) const {
    std::size_t d = 0;
    for (; nodes_[v].parent != kNone; v = nodes_[v].parent) ++d;
    return d;
  }

  Data& data() { return data_; }
  const Data& data() const { return data_; }

  std::uint64_t rotation_count() const { return rotations_; }
  void reset_rotation_count() { rotations_ = 0; }

  /// Reusable buffer for heuristics that collect nodes on a root path.
  std::vector<NodeId>& scratch() { return scratch_; }

  /// Raw overwrite of one node's handles. Used by structure builders and
  /// fault-injection tests; bypasses every invariant.
  void set_fields(NodeId v, NodeId parent, NodeId dsep, NodeId isep) {
    nodes_[v] = Node{parent, dsep, isep};
  }

 private:
  struct Node {
    NodeId parent = kNone;
    NodeId dsep = kNone;
    NodeId isep = kNone;
  };

  std::vector<Node> nodes_;
  Data data_;
  std::vector<NodeId> scratch_;
  std::uint64_t rotations_ = 0;
};

template <class Data>
void SttForest<Data>::rotate(NodeId v) {
  Node& nv = nodes_[v];
  const NodeId p = nv.parent;
  expect(p != kNone, "rotate: node is a root");
  Node& np = nodes_[p];
  const NodeId g = np.parent;
  const NodeId c = nv.dsep;
  const bool v_direct = np.dsep == v;
  const bool v_sep = v_direct || np.isep == v;
  const bool p_sep = g != kNone && (nodes_[g].dsep == p || nodes_[g].isep == p);
  expect(v_sep || !p_sep, "rotate: rotation would violate the 2-cut property");

  data_.on_rotate(RotationContext{v, p, g, c, v_direct, v_sep, p_sep});
  ++rotations_;

  // v inherits p's place (and designation) below g.
  if (g != kNone) {
    Node& ng = nodes_[g];
    if (ng.dsep == p)
      ng.dsep = v;
    else if (ng.isep == p)
      ng.isep = v;
  }

  // p: c is the unique child with boundary {v, p}; the other separator child
  // of p (if any) is now indirect since p's new parent is v.
  const NodeId p_other = v_direct ? np.isep : np.dsep;
  const NodeId v_old_isep = nv.isep;
  np.parent = v;
  np.dsep = c;
  np.isep = p_other;

  nv.parent = g;
  if (g == kNone) {
    nv.dsep = kNone;
    nv.isep = kNone;
  } else if (v_direct) {
    // Underlying order is p, v, g; with p a separator the path is a, p, v, g.
    nv.dsep = v_old_isep;
    nv.isep = p_sep ? p : kNone;
  } else {
    // Underlying order is v, p, g, so p separates v from g.
    nv.dsep = p;
  }

  // c swaps its parent and grandparent, so its separator children swap kind.
  if (c != kNone) {
    Node& nc = nodes_[c];
    nc.parent = p;
    std::swap(nc.dsep, nc.isep);
  }
}

}  // namespace stt
