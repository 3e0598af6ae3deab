#pragma once

// O(n)-per-node validators for 2-cut search forests. They are meant for tests
// and instrumented runs on small forests, never for the benchmark paths.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "stt/stt_forest.hpp"
#include "stt/types.hpp"

namespace stt {

/// Up to two boundary vertices; unused slots hold kNone.
using Boundary = std::array<NodeId, 2>;

inline std::size_t boundary_size(const Boundary& b) {
  return (b[0] != kNone) + (b[1] != kNone);
}
inline bool boundary_contains(const Boundary& b, NodeId x) {
  return x != kNone && (b[0] == x || b[1] == x);
}

struct ValidationReport {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }

  static ValidationReport failure(std::string msg) {
    return ValidationReport{false, std::move(msg)};
  }
};

template <class F>
std::vector<std::vector<NodeId>> children_lists(const F& f) {
  std::vector<std::vector<NodeId>> children(f.size());
  for (NodeId v = 0; v < f.size(); ++v)
    if (f.parent(v) != kNone) children[f.parent(v)].push_back(v);
  return children;
}

/// Nodes ordered so that every parent precedes its children. Returns an
/// empty optional if the parent handles contain a cycle.
template <class F>
std::optional<std::vector<NodeId>> top_down_order(const F& f) {
  const auto children = children_lists(f);
  std::vector<NodeId> order;
  order.reserve(f.size());
  for (NodeId r = 0; r < f.size(); ++r) {
    if (f.parent(r) != kNone) continue;
    order.push_back(r);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (NodeId c : children[order[i]]) order.push_back(c);
  }
  if (order.size() != f.size()) return std::nullopt;
  return order;
}

/// Boundaries determined from the designators alone, top-down: roots have
/// none, 1-cut nodes have {parent}, direct separators {parent, grandparent}
/// and indirect separators {parent, the other boundary vertex of parent}.
template <class F>
std::optional<std::vector<Boundary>> boundaries_from_designators(const F& f) {
  const auto order = top_down_order(f);
  if (!order) return std::nullopt;
  std::vector<Boundary> bd(f.size(), Boundary{kNone, kNone});
  for (NodeId v : *order) {
    const NodeId p = f.parent(v);
    if (p == kNone) continue;
    const NodeId g = f.parent(p);
    if (f.dsep_child(p) == v) {
      if (g == kNone) return std::nullopt;
      bd[v] = {p, g};
    } else if (f.isep_child(p) == v) {
      const Boundary& bp = bd[p];
      if (boundary_size(bp) != 2) return std::nullopt;
      const NodeId other = bp[0] == g ? bp[1] : bp[0];
      if (other == g || !boundary_contains(bp, g)) return std::nullopt;
      bd[v] = {p, other};
    } else {
      bd[v] = {p, kNone};
    }
  }
  return bd;
}

/// Reconstructs E(G): an ancestor u is adjacent to v iff u lies in the
/// boundary of v's subtree but in the boundary of none of v's children.
template <class F>
std::vector<Edge> underlying_edges(const F& f) {
  std::vector<Edge> edges;
  const auto bd = boundaries_from_designators(f);
  if (!bd) return edges;
  const auto children = children_lists(f);
  for (NodeId v = 0; v < f.size(); ++v) {
    for (NodeId u : (*bd)[v]) {
      if (u == kNone) continue;
      const bool below = std::any_of(
          children[v].begin(), children[v].end(),
          [&](NodeId c) { return boundary_contains((*bd)[c], u); });
      if (!below) edges.push_back(make_edge(u, v));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::vector<std::vector<NodeId>> adjacency(std::size_t n,
                                                  std::span<const Edge> edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return adj;
}

/// Membership test for search-tree subtrees via DFS intervals.
template <class F>
class SubtreeIndex {
 public:
  explicit SubtreeIndex(const F& f) : enter_(f.size()), leave_(f.size()) {
    const auto children = children_lists(f);
    std::size_t clock = 0;
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId r = 0; r < f.size(); ++r) {
      if (f.parent(r) != kNone) continue;
      stack.push_back({r, 0});
      enter_[r] = clock++;
      while (!stack.empty()) {
        auto& [x, i] = stack.back();
        if (i < children[x].size()) {
          const NodeId c = children[x][i++];
          enter_[c] = clock++;
          stack.push_back({c, 0});
        } else {
          leave_[x] = clock;
          stack.pop_back();
        }
      }
    }
  }
  /// True iff x lies in the subtree of v.
  bool contains(NodeId v, NodeId x) const {
    return enter_[v] <= enter_[x] && enter_[x] < leave_[v];
  }

 private:
  std::vector<std::size_t> enter_, leave_;
};

/// Brute-force outer boundary of v's subtree with respect to `adj`.
template <class F>
std::vector<NodeId> compute_boundary(const F& f, const SubtreeIndex<F>& index,
                                     const std::vector<std::vector<NodeId>>& adj,
                                     NodeId v) {
  std::vector<NodeId> out;
  for (NodeId x = 0; x < f.size(); ++x) {
    if (!index.contains(v, x)) continue;
    for (NodeId y : adj[x])
      if (!index.contains(v, y)) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class F>
std::vector<NodeId> compute_boundary(const F& f, NodeId v) {
  const auto edges = underlying_edges(f);
  return compute_boundary(f, SubtreeIndex<F>(f), adjacency(f.size(), edges), v);
}

/// Full structural check: parent acyclicity, search-tree properties on the
/// underlying forest, the 2-cut bound, and designators against brute-force
/// classification. `truth`, when given, is the expected edge set and is used
/// instead of the reconstruction (which is then compared against it).
template <class F>
ValidationReport validate(const F& f, const std::vector<Edge>* truth = nullptr) {
  const std::size_t n = f.size();
  std::ostringstream msg;
  if (!top_down_order(f)) return ValidationReport::failure("parent cycle");
  for (NodeId v = 0; v < n; ++v) {
    const NodeId d = f.dsep_child(v), i = f.isep_child(v);
    if ((d != kNone && f.parent(d) != v) || (i != kNone && f.parent(i) != v)) {
      msg << "designator of " << v << " names a non-child";
      return ValidationReport::failure(msg.str());
    }
    if (d != kNone && d == i) {
      msg << "node " << v << " has identical designators";
      return ValidationReport::failure(msg.str());
    }
  }

  const auto rebuilt = underlying_edges(f);
  std::vector<Edge> edges = truth ? *truth : rebuilt;
  std::sort(edges.begin(), edges.end());
  if (truth && edges != rebuilt)
    return ValidationReport::failure("reconstructed edges differ from truth");

  const SubtreeIndex<F> index(f);
  const auto adj = adjacency(n, edges);

  // Ancestor property for every edge.
  for (const Edge& e : edges) {
    if (!index.contains(e.first, e.second) && !index.contains(e.second, e.first)) {
      msg << "edge {" << e.first << "," << e.second << "} joins non-ancestors";
      return ValidationReport::failure(msg.str());
    }
  }
  // Connected-subtree property: the edges inside T_v number |T_v| - 1.
  const auto children = children_lists(f);
  std::vector<std::size_t> size(n, 1), inner(n, 0);
  const auto order = *top_down_order(f);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (f.parent(*it) != kNone) size[f.parent(*it)] += size[*it];
  for (const Edge& e : edges) {
    // The edge lies inside T_x for every common ancestor x of both ends.
    const NodeId lower = index.contains(e.first, e.second) ? e.second : e.first;
    for (NodeId x = f.parent(lower); x != kNone; x = f.parent(x))
      if (index.contains(x, e.first) && index.contains(x, e.second)) ++inner[x];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (inner[v] + 1 != size[v]) {
      msg << "subtree of " << v << " is not connected in the underlying forest";
      return ValidationReport::failure(msg.str());
    }
  }

  for (NodeId v = 0; v < n; ++v) {
    const auto b = compute_boundary(f, index, adj, v);
    if (b.size() > 2) {
      msg << "node " << v << " is " << b.size() << "-cut";
      return ValidationReport::failure(msg.str());
    }
    const NodeId p = f.parent(v);
    if (p == kNone) {
      if (!b.empty()) {
        msg << "root " << v << " has a nonempty boundary";
        return ValidationReport::failure(msg.str());
      }
      continue;
    }
    if (std::find(b.begin(), b.end(), p) == b.end()) {
      msg << "parent of " << v << " missing from its boundary";
      return ValidationReport::failure(msg.str());
    }
    const NodeId g = f.parent(p);
    const bool sep = b.size() == 2;
    const bool direct = sep && g != kNone && std::find(b.begin(), b.end(), g) != b.end();
    const bool says_direct = f.dsep_child(p) == v;
    const bool says_indirect = f.isep_child(p) == v;
    if (direct != says_direct || (sep && !direct) != says_indirect) {
      msg << "designator mismatch at " << v << " (boundary size " << b.size()
          << ", direct=" << direct << ")";
      return ValidationReport::failure(msg.str());
    }
  }
  return {};
}

/// Installs designators for an arbitrary search forest given by parent
/// handles and its underlying edges, classifying nodes by brute force. The
/// caller guarantees the structure is a valid 2-cut search forest.
template <class F>
void assign_structure(F& f, std::span<const NodeId> parents,
                      std::span<const Edge> edges) {
  for (NodeId v = 0; v < f.size(); ++v) f.set_fields(v, parents[v], kNone, kNone);
  const SubtreeIndex<F> index(f);
  const auto adj = adjacency(f.size(), edges);
  std::vector<NodeId> dsep(f.size(), kNone), isep(f.size(), kNone);
  for (NodeId v = 0; v < f.size(); ++v) {
    const NodeId p = parents[v];
    if (p == kNone) continue;
    const auto b = compute_boundary(f, index, adj, v);
    if (b.size() != 2) continue;
    const NodeId g = parents[p];
    const bool direct = g != kNone && std::find(b.begin(), b.end(), g) != b.end();
    (direct ? dsep : isep)[p] = v;
  }
  for (NodeId v = 0; v < f.size(); ++v) f.set_fields(v, parents[v], dsep[v], isep[v]);
}

}  // namespace stt
