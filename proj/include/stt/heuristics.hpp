#pragma once

// NodeToRoot strategies for 2-cut search forests.
//
// Every strategy is written against a `limit` node: the loop stops once the
// target's parent equals `limit`. With limit = kNone this is NodeToRoot;
// with limit = the current root it is NodeBelowRoot. A child of the root is
// 1-cut, so for legality purposes it behaves exactly like a root, and no
// rotation ever touches the root itself while a limit is set.

#include <string_view>
#include <vector>

#include "stt/types.hpp"

namespace stt {

/// True iff splay_step(v) keeps the forest 2-cut: v has no grandparent below
/// `limit`, or its grandparent is 1-cut, or v and its parent are both
/// separators.
template <class F>
bool can_splay_step(const F& f, NodeId v, NodeId limit = kNone) {
  const NodeId p = f.parent(v);
  expect(p != limit, "can_splay_step: node has no parent");
  const NodeId g = f.parent(p);
  if (g == limit) return true;
  if (!f.is_separator(g)) return true;
  return f.is_separator_hint(v, p) && f.is_separator_hint(p, g);
}

/// ZIG if v has no grandparent below `limit`; ZIG-ZAG (two rotations at v)
/// if v lies between its parent and grandparent, i.e. v is a direct
/// separator; ZIG-ZIG otherwise.
template <class F>
void splay_step(F& f, NodeId v, NodeId limit = kNone) {
  const NodeId p = f.parent(v);
  expect(p != limit, "splay_step: node has no parent");
  const NodeId g = f.parent(p);
  if (g == limit) {
    f.rotate(v);
  } else if (f.dsep_child(p) == v) {
    f.rotate(v);
    f.rotate(v);
  } else {
    f.rotate(p);
    f.rotate(v);
  }
}

/// Splay-steps x until y is its parent or grandparent, then rotates once
/// more if needed so that x ends as a child of y.
template <class F>
void splay_to(F& f, NodeId x, NodeId y) {
  for (;;) {
    const NodeId p = f.parent(x);
    expect(p != kNone, "splay_to: target is not an ancestor");
    if (p == y) return;
    const NodeId g = f.parent(p);
    expect(g != kNone, "splay_to: target is not an ancestor");
    if (g == y) {
      f.rotate(x);
      return;
    }
    splay_step(f, x);
  }
}

struct MoveToRootTT {
  static constexpr std::string_view kName = "MTR";
  static constexpr bool kStable = true;

  template <class F>
  static void bring_up(F& f, NodeId v, NodeId limit) {
    for (NodeId p; (p = f.parent(v)) != limit;) {
      if (f.can_rotate_hint(v, p))
        f.rotate(v);
      else
        f.rotate(p);
    }
  }
};

struct GreedySplayTT {
  static constexpr std::string_view kName = "Greedy Splay";
  static constexpr bool kStable = true;

  template <class F>
  static void bring_up(F& f, NodeId v, NodeId limit) {
    for (NodeId p; (p = f.parent(v)) != limit;) {
      const NodeId g = f.parent(p);
      if (g == limit) {
        f.rotate(v);
      } else if (can_splay_step(f, v, limit)) {
        splay_step(f, v, limit);
      } else if (can_splay_step(f, p, limit)) {
        splay_step(f, p, limit);
      } else {
        // One of the three steps is always legal.
        splay_step(f, g, limit);
      }
    }
  }
};

struct TwoPassSplayTT {
  static constexpr std::string_view kName = "2P Splay";
  static constexpr bool kStable = true;

  template <class F>
  static void bring_up(F& f, NodeId v, NodeId limit) {
    // Pass 1: collect branching nodes (separators with a 1-cut child on the
    // path) bottom-up and splay each to just below the next one.
    std::vector<NodeId>& branching = f.scratch();
    branching.clear();
    for (NodeId x = v, p; (p = f.parent(x)) != limit; x = p)
      if (!f.is_separator_hint(x, p) && f.is_separator(p)) branching.push_back(p);

    if (!branching.empty()) {
      splay_to(f, v, branching.front());
      for (std::size_t i = 0; i + 1 < branching.size(); ++i)
        splay_to(f, branching[i], branching[i + 1]);
      const NodeId top = branching.back();
      while (f.parent(top) != limit) splay_step(f, top, limit);
    }

    // Pass 2: every rotation on v's root path is now legal.
    while (f.parent(v) != limit) splay_step(f, v, limit);
  }
};

struct LocalTwoPassSplayTT {
  static constexpr std::string_view kName = "L2P Splay";
  static constexpr bool kStable = true;

  template <class F>
  static void bring_up(F& f, NodeId v, NodeId limit) {
    for (NodeId p; (p = f.parent(v)) != limit;) {
      const NodeId g = f.parent(p);
      if (g == limit) {
        f.rotate(v);
      } else if (can_splay_step(f, v, limit)) {
        splay_step(f, v, limit);
      } else if (f.is_separator_hint(p, g)) {
        // p is a branching node (v is 1-cut); g is a separator, so the step
        // at p is legal.
        splay_step(f, p, limit);
      } else if (can_splay_step(f, g, limit)) {
        // g is a branching node.
        splay_step(f, g, limit);
      } else {
        f.rotate(g);
      }
    }
  }
};

template <class Strategy, class F>
void node_to_root(F& f, NodeId v) {
  Strategy::bring_up(f, v, kNone);
}

/// Brings v directly below `root`, which must be the root of v's tree and
/// stays the root.
template <class Strategy, class F>
void node_below(F& f, NodeId v, NodeId root) {
  expect(v != root, "node_below_root: node is the root");
  Strategy::bring_up(f, v, root);
}

template <class Strategy, class F>
void node_below_root(F& f, NodeId v) {
  node_below<Strategy>(f, v, f.root_of(v));
}

}  // namespace stt
