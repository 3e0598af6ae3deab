#pragma once

// Rooted dynamic forests on 2-cut search forests.
//
// Each node may carry droot(v) = r, the underlying root of its tree, exactly
// when r lies in v's search subtree. Those nodes form r's search root path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stt/heuristics.hpp"
#include "stt/stt_forest.hpp"
#include "stt/types.hpp"

namespace stt {

class RootedData {
 public:
  void resize(std::size_t n) {
    droot_.resize(n);
    for (NodeId v = 0; v < n; ++v) droot_[v] = v;
  }

  NodeId droot(NodeId v) const { return droot_[v]; }
  void set_droot(NodeId v, NodeId r) { droot_[v] = r; }

  void on_rotate(const RotationContext& ctx) {
    const NodeId dp = droot_[ctx.p];
    const NodeId dv = droot_[ctx.v];
    // v's new subtree is p's old one.
    droot_[ctx.v] = dp;
    // p keeps the root unless it was reachable only through v, outside the
    // child c that moves below p.
    if (dp != kNone && dv != kNone)
      droot_[ctx.p] = (ctx.c != kNone && droot_[ctx.c] != kNone) ? dp : kNone;
  }

  // Called when an underlying root is hung below another tree.
  void on_attach(NodeId u, NodeId) { droot_[u] = kNone; }
  void on_detach(NodeId) {}

 private:
  std::vector<NodeId> droot_;
};

template <class Strategy>
class RootedSttForest {
 public:
  using strategy_type = Strategy;
  using forest_type = SttForest<RootedData>;

  RootedSttForest() = default;
  explicit RootedSttForest(std::size_t n) : f_(n) {}

  std::size_t size() const { return f_.size(); }

  NodeId find_root(NodeId v) {
    node_to_root<Strategy>(f_, v);
    return f_.data().droot(v);
  }

  /// Makes v the parent of u. u must be the root of its tree and v must lie
  /// in a different tree.
  void link(NodeId u, NodeId v) {
    expect(u != v, "link: self loop");
    node_to_root<Strategy>(f_, u);
    expect(f_.data().droot(u) == u, "link: node is not the root of its tree");
    node_to_root<Strategy>(f_, v);
    expect(f_.is_root(u), "link: nodes are already connected");
    f_.attach(u, v);
  }

  /// Removes the edge between v and its parent.
  void cut(NodeId v) {
    node_to_root<Strategy>(f_, v);
    const NodeId r = f_.data().droot(v);
    expect(r != v, "cut: node is the root of its tree");
    node_below<Strategy>(f_, r, v);
    // The parent of v is the last vertex before v on the r-v path: walk the
    // separators that cover that path.
    NodeId u = r;
    if (NodeId x = f_.dsep_child(r); x != kNone) {
      while (f_.isep_child(x) != kNone) x = f_.isep_child(x);
      u = x;
    }
    if (u != r) node_below<Strategy>(f_, u, v);
    f_.detach(u);
    f_.data().set_droot(v, v);
  }

  std::optional<NodeId> lca(NodeId u, NodeId v) {
    if (u == v) return u;
    node_to_root<Strategy>(f_, v);
    const NodeId ru = f_.root_of(u);
    if (ru != v) {
      node_to_root<Strategy>(f_, u);
      return std::nullopt;
    }
    node_below<Strategy>(f_, u, v);
    const RootedData& d = f_.data();
    const NodeId r = d.droot(v);
    // The root lies beyond v: every path from u to it passes v.
    if (r == v || d.droot(u) == kNone) return v;
    if (r == u) return u;
    // The u-v path runs through the direct separator child of u; the answer
    // is where the root's path meets it.
    NodeId x = f_.dsep_child(u);
    if (x == kNone || d.droot(x) == kNone) return u;
    for (;;) {
      const NodeId ds = f_.dsep_child(x), is = f_.isep_child(x);
      if (ds != kNone && d.droot(ds) != kNone)
        x = ds;
      else if (is != kNone && d.droot(is) != kNone)
        x = is;
      else
        break;
    }
    node_to_root<Strategy>(f_, x);
    return x;
  }

  /// Re-roots v's tree at v.
  void evert(NodeId v) {
    node_to_root<Strategy>(f_, v);
    RootedData& d = f_.data();
    const NodeId r = d.droot(v);
    if (r == v) return;
    for (NodeId x = r; x != kNone; x = f_.parent(x)) d.set_droot(x, kNone);
    d.set_droot(v, v);
    node_to_root<Strategy>(f_, r);
  }

  forest_type& stt() { return f_; }
  const forest_type& stt() const { return f_; }
  std::uint64_t rotations() const { return f_.rotation_count(); }

 private:
  forest_type f_;
};

}  // namespace stt
