#pragma once

// Amortized link-cut trees with a lazy reverse bit.
//
// Edge weights: taken together, the auxiliary splay trees (with path-parent
// links as parent edges) form a 2-cut search tree on the underlying forest. A
// node's subtree covers a contiguous segment of its preferred path plus
// everything hanging off it, so its boundary is the segment's path
// predecessor (or the path-parent, at the top end) and successor. Splicing
// and reversal leave that search tree unchanged; only splay rotations change
// it, and they update pdist/adist exactly like search-tree rotations. A node
// is a separator iff its adist is present.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "stt/types.hpp"
#include "stt/weights.hpp"

namespace stt {

template <MonoidWeight M = UnitWeight, bool Evert = true>
class LinkCutForest {
 public:
  using weight_type = M;
  using value_type = typename M::value_type;

  static constexpr bool kWeighted = !std::is_empty_v<value_type>;

  LinkCutForest() = default;
  explicit LinkCutForest(std::size_t n) : t_(n) {
    if constexpr (kWeighted) {
      pdist_.assign(n, std::nullopt);
      adist_.assign(n, std::nullopt);
    }
  }

  std::size_t size() const { return t_.size(); }
  std::uint64_t rotations() const { return rotations_; }

  // ---- unrooted interface (requires evert) -------------------------------

  void link(NodeId u, NodeId v, const value_type& w = M::identity())
    requires Evert
  {
    expect(u != v, "link: self loop");
    evert(u);
    expect(!same_tree_after_evert(u, v), "link: nodes are already connected");
    t_[u].parent = v;
    if constexpr (kWeighted) {
      pdist_[u] = w;
      adist_[u].reset();
    }
  }

  void cut(NodeId u, NodeId v)
    requires Evert
  {
    expect(u != v, "cut: self loop");
    evert(u);
    access(v);
    push(v);
    const bool adjacent = t_[v].ch[0] == u && (push(u), t_[u].ch[1] == kNone);
    expect(adjacent, "cut: edge does not exist");
    t_[v].ch[0] = kNone;
    t_[u].parent = kNone;
    if constexpr (kWeighted) {
      pdist_[u].reset();
      adist_[u].reset();
    }
  }

  std::optional<value_type> compute_path_weight(NodeId u, NodeId v)
    requires Evert
  {
    if (u == v) return M::identity();
    evert(u);
    access(v);
    // u was an auxiliary root without a path-parent; it stays one unless
    // access(v) reached it.
    if (t_[u].parent == kNone) return std::nullopt;
    value_type acc = M::identity();
    if constexpr (kWeighted) {
      // u is the top of the path, so its auxiliary ancestors are 1-cut and
      // appear in path order.
      for (NodeId x = u; x != v; x = t_[x].parent) acc = M::combine(acc, *pdist_[x]);
    }
    splay(u);
    return acc;
  }

  bool connected(NodeId u, NodeId v)
    requires Evert
  {
    return compute_path_weight(u, v).has_value();
  }

  // ---- rooted interface ---------------------------------------------------

  NodeId find_root(NodeId v) {
    access(v);
    NodeId x = v;
    push(x);
    while (t_[x].ch[0] != kNone) {
      x = t_[x].ch[0];
      push(x);
    }
    splay(x);
    return x;
  }

  /// Makes v the parent of the tree root u.
  void rooted_link(NodeId u, NodeId v) {
    expect(u != v, "link: self loop");
    access(u);
    push(u);
    expect(t_[u].ch[0] == kNone, "link: node is not the root of its tree");
    expect(find_root(v) != u, "link: nodes are already connected");
    t_[u].parent = v;
  }

  /// Removes the edge between v and its parent.
  void rooted_cut(NodeId v) {
    access(v);
    push(v);
    const NodeId l = t_[v].ch[0];
    expect(l != kNone, "cut: node is the root of its tree");
    t_[v].ch[0] = kNone;
    t_[l].parent = kNone;
  }

  std::optional<NodeId> lca(NodeId u, NodeId v) {
    if (u == v) return u;
    if (find_root(u) != find_root(v)) return std::nullopt;
    access(u);
    return access(v);
  }

  void evert(NodeId v)
    requires Evert
  {
    access(v);
    t_[v].rev ^= true;
  }

  /// Splices v's root path into one auxiliary tree rooted at v. Returns the
  /// last auxiliary root met, which is the LCA with the previous access.
  NodeId access(NodeId x) {
    NodeId last = kNone;
    for (NodeId y = x; y != kNone; y = t_[y].parent) {
      splay(y);
      t_[y].ch[1] = last;
      last = y;
    }
    splay(x);
    return last;
  }

 private:
  struct Node {
    NodeId ch[2] = {kNone, kNone};
    NodeId parent = kNone;  // auxiliary parent or path-parent
    bool rev = false;
  };

  bool is_aux_root(NodeId x) const {
    const NodeId p = t_[x].parent;
    return p == kNone || (t_[p].ch[0] != x && t_[p].ch[1] != x);
  }

  void push(NodeId x) {
    if constexpr (Evert) {
      Node& n = t_[x];
      if (!n.rev) return;
      std::swap(n.ch[0], n.ch[1]);
      if (n.ch[0] != kNone) t_[n.ch[0]].rev ^= true;
      if (n.ch[1] != kNone) t_[n.ch[1]].rev ^= true;
      n.rev = false;
    }
  }

  // After evert(u), u is an auxiliary root with no path-parent.
  bool same_tree_after_evert(NodeId u, NodeId v) {
    access(v);
    return t_[u].parent != kNone;
  }

  // x and its parent must already be pushed.
  void rotate(NodeId x) {
    const NodeId p = t_[x].parent;
    const NodeId g = t_[p].parent;
    const int dx = t_[p].ch[1] == x;
    const bool p_aux_root = is_aux_root(p);
    const int dp = p_aux_root ? -1 : (t_[g].ch[1] == p);
    const NodeId inner = t_[x].ch[1 - dx];

    if constexpr (kWeighted) {
      // Left is toward the tree root. x's segment borders p on one side; the
      // other side is g iff the shape is zig-zag, or, below an auxiliary root
      // p, iff x is on the top side and the path has a path-parent g.
      const bool x_direct = p_aux_root ? (dx == 0 && g != kNone) : (dx != dp);
      const bool p_sep = adist_[p].has_value();
      const bool p_was_root = p_aux_root && g == kNone;
      update_weights(x, p, inner, x_direct, p_sep, p_was_root);
    }
    ++rotations_;

    t_[p].ch[dx] = inner;
    if (inner != kNone) t_[inner].parent = p;
    t_[x].ch[1 - dx] = p;
    t_[p].parent = x;
    t_[x].parent = g;
    if (dp >= 0) t_[g].ch[dp] = x;
  }

  void update_weights(NodeId v, NodeId p, NodeId c, bool v_direct, bool p_sep,
                      bool p_was_root) {
    if (c != kNone) std::swap(pdist_[c], adist_[c]);
    const std::optional<value_type> pv = pdist_[v], av = adist_[v];
    const std::optional<value_type> pp = pdist_[p], ap = adist_[p];
    pdist_[p] = pv;
    if (p_was_root) {
      pdist_[v].reset();
      adist_[v].reset();
      adist_[p].reset();
    } else if (v_direct) {
      pdist_[v] = av;
      if (p_sep) {
        adist_[v] = M::combine(*pv, *ap);
      } else {
        adist_[v].reset();
        adist_[p].reset();
      }
    } else {
      pdist_[v] = M::combine(*pv, *pp);
      adist_[p] = pp;
      if (!p_sep) adist_[v].reset();
    }
  }

  void splay(NodeId x) {
    // Resolve pending reversals from the auxiliary root down to x.
    if constexpr (Evert) {
      stack_.clear();
      for (NodeId y = x;; y = t_[y].parent) {
        stack_.push_back(y);
        if (is_aux_root(y)) break;
      }
      for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) push(*it);
    }
    while (!is_aux_root(x)) {
      const NodeId p = t_[x].parent;
      if (!is_aux_root(p)) {
        const NodeId g = t_[p].parent;
        const bool zig_zig = (t_[g].ch[1] == p) == (t_[p].ch[1] == x);
        rotate(zig_zig ? p : x);
      }
      rotate(x);
    }
  }

  std::vector<Node> t_;
  std::vector<std::optional<value_type>> pdist_;
  std::vector<std::optional<value_type>> adist_;
  std::vector<NodeId> stack_;
  std::uint64_t rotations_ = 0;
};

}  // namespace stt
