#pragma once

// Shared test instrumentation: brute-force legality and stability checks
// wrapped around any strategy, tree enumeration, and oracle distances.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stt/heuristics.hpp"
#include "stt/oracle.hpp"
#include "stt/random.hpp"
#include "stt/stt_forest.hpp"
#include "stt/validate.hpp"

namespace stt::testing {

struct Stats {
  std::uint64_t calls = 0;
  std::uint64_t root_calls = 0;      // calls bringing a node to the root
  std::uint64_t rotations = 0;
  std::uint64_t illegal = 0;         // rotations failing the brute-force predicate
  std::uint64_t unstable = 0;        // NodeToRoot calls violating stability
  std::uint64_t over_budget = 0;     // calls with more than 4n rotations
  std::uint64_t wrong_endpoint = 0;  // target not at the root / below the root
};

inline Stats& stats() {
  thread_local Stats s;
  return s;
}

/// Forwards the structural interface of a forest and checks each rotation
/// against brute-force boundaries of the (unchanging) underlying forest.
template <class F>
class CheckedView {
 public:
  explicit CheckedView(F& f) : f_(f), adj_(adjacency(f.size(), underlying_edges(f))) {}

  std::size_t size() const { return f_.size(); }
  NodeId parent(NodeId v) const { return f_.parent(v); }
  NodeId dsep_child(NodeId v) const { return f_.dsep_child(v); }
  NodeId isep_child(NodeId v) const { return f_.isep_child(v); }
  bool is_root(NodeId v) const { return f_.is_root(v); }
  bool is_separator_hint(NodeId v, NodeId p) const { return f_.is_separator_hint(v, p); }
  bool is_separator(NodeId v) const { return f_.is_separator(v); }
  bool can_rotate_hint(NodeId v, NodeId p) const { return f_.can_rotate_hint(v, p); }
  NodeId root_of(NodeId v) const { return f_.root_of(v); }
  std::vector<NodeId>& scratch() { return f_.scratch(); }

  void rotate(NodeId v) {
    const NodeId p = f_.parent(v);
    if (boundary_size_of(v) == 1 && boundary_size_of(p) == 2) ++stats().illegal;
    ++stats().rotations;
    ++rotations_;
    f_.rotate(v);
  }

  std::uint64_t rotations() const { return rotations_; }

  /// |boundary of T_x|, by brute force.
  std::size_t boundary_size_of(NodeId x) const {
    std::set<NodeId> out;
    for (NodeId y = 0; y < f_.size(); ++y) {
      if (!in_subtree(x, y)) continue;
      for (NodeId z : adj_[y])
        if (!in_subtree(x, z)) out.insert(z);
    }
    return out.size();
  }

 private:
  bool in_subtree(NodeId x, NodeId y) const {
    for (; y != kNone; y = f_.parent(y))
      if (y == x) return true;
    return false;
  }

  F& f_;
  std::vector<std::vector<NodeId>> adj_;
  std::uint64_t rotations_ = 0;
};

/// True iff r sits at depth <= 6 and every node on its root path except the
/// root is 1-cut.
template <class F>
bool stable_position(const F& f, NodeId r) {
  if (f.depth(r) > 6) return false;
  for (NodeId x = r; f.parent(x) != kNone; x = f.parent(x))
    if (f.is_separator(x)) return false;
  return true;
}

/// Strategy wrapper recording legality, stability, budget and endpoint
/// violations into stats().
template <class S>
struct Instrumented {
  static constexpr auto kName = S::kName;
  static constexpr bool kStable = S::kStable;

  template <class F>
  static void bring_up(F& f, NodeId v, NodeId limit) {
    ++stats().calls;
    const NodeId old_root = f.root_of(v);
    CheckedView<F> view(f);
    S::bring_up(view, v, limit);
    if (view.rotations() > 4 * f.size()) ++stats().over_budget;
    if (f.parent(v) != limit) ++stats().wrong_endpoint;
    if (limit == kNone) ++stats().root_calls;
    if (limit == kNone && S::kStable && old_root != v && !stable_position(f, old_root))
      ++stats().unstable;
  }
};

// ---- trees and search trees -------------------------------------------

using EdgeList = std::vector<Edge>;

inline EdgeList prufer_to_edges(const std::vector<NodeId>& code, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (NodeId x : code) ++degree[x];
  EdgeList edges;
  for (NodeId x : code) {
    NodeId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back(make_edge(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  NodeId a = kNone, b = kNone;
  for (NodeId v = 0; v < n; ++v)
    if (degree[v] == 1) (a == kNone ? a : b) = v;
  edges.push_back(make_edge(a, b));
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::string ahu(const std::vector<std::vector<NodeId>>& adj, NodeId v, NodeId from) {
  std::vector<std::string> parts;
  for (NodeId w : adj[v])
    if (w != from) parts.push_back(ahu(adj, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

/// Canonical form of a free tree: the smallest rooted AHU code over all
/// roots.
inline std::string free_tree_code(std::size_t n, const EdgeList& edges) {
  const auto adj = adjacency(n, edges);
  std::string best;
  for (NodeId r = 0; r < n; ++r) {
    std::string c = ahu(adj, r, kNone);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

/// One representative per isomorphism class of trees on n >= 1 vertices.
inline std::vector<EdgeList> all_unlabeled_trees(std::size_t n) {
  if (n == 1) return {EdgeList{}};
  if (n == 2) return {EdgeList{make_edge(0, 1)}};
  std::map<std::string, EdgeList> classes;
  std::vector<NodeId> code(n - 2, 0);
  for (;;) {
    EdgeList e = prufer_to_edges(code, n);
    classes.emplace(free_tree_code(n, e), std::move(e));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  std::vector<EdgeList> out;
  for (auto& [k, e] : classes) out.push_back(std::move(e));
  return out;
}

namespace detail {

inline void search_trees_rec(const std::vector<std::vector<NodeId>>& adj,
                             std::vector<NodeId> vertices, NodeId parent,
                             std::vector<NodeId>& current,
                             const std::function<void()>& next) {
  // Choose each vertex as the root of this component, then recurse into the
  // components that remain.
  for (NodeId r : vertices) {
    current[r] = parent;
    std::vector<std::vector<NodeId>> comps;
    std::set<NodeId> left(vertices.begin(), vertices.end());
    left.erase(r);
    while (!left.empty()) {
      std::vector<NodeId> comp{*left.begin()};
      left.erase(left.begin());
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (NodeId w : adj[comp[i]])
          if (left.erase(w)) comp.push_back(w);
      comps.push_back(std::move(comp));
    }
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
      if (k == comps.size()) {
        next();
        return;
      }
      search_trees_rec(adj, comps[k], r, current, [&] { fill(k + 1); });
    };
    fill(0);
  }
}

}  // namespace detail

/// Calls visit(parents) for every search tree on the tree given by `edges`.
inline void for_each_search_tree(std::size_t n, const EdgeList& edges,
                                 const std::function<void(const std::vector<NodeId>&)>& visit) {
  const auto adj = adjacency(n, edges);
  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  std::vector<NodeId> current(n, kNone);
  detail::search_trees_rec(adj, all, kNone, current, [&] { visit(current); });
}

/// Every 2-cut search tree on the tree, with designators installed.
inline std::vector<SttForest<>> all_two_cut_stts(std::size_t n, const EdgeList& edges) {
  std::vector<SttForest<>> out;
  for_each_search_tree(n, edges, [&](const std::vector<NodeId>& parents) {
    SttForest<> f(n);
    for (NodeId v = 0; v < n; ++v) f.set_fields(v, parents[v], kNone, kNone);
    const SubtreeIndex<SttForest<>> index(f);
    const auto adj = adjacency(n, edges);
    for (NodeId v = 0; v < n; ++v)
      if (compute_boundary(f, index, adj, v).size() > 2) return;
    assign_structure(f, std::span<const NodeId>(parents), std::span<const Edge>(edges));
    out.push_back(std::move(f));
  });
  return out;
}

// ---- oracle distances ---------------------------------------------------

/// Checks pdist against oracle distances for every non-root node and adist
/// for every separator (whose other boundary vertex is found by brute force).
template <class F, class Oracle, class Data>
std::optional<std::string> check_annotations(const F& f, Oracle& oracle, const Data& data) {
  const auto edges = underlying_edges(f);
  const SubtreeIndex<F> index(f);
  const auto adj = adjacency(f.size(), edges);
  for (NodeId v = 0; v < f.size(); ++v) {
    const NodeId p = f.parent(v);
    if (p == kNone) {
      if (data.pdist(v)) return "root " + std::to_string(v) + " has a pdist";
      continue;
    }
    if (data.pdist(v) != oracle.compute_path_weight(v, p))
      return "pdist mismatch at " + std::to_string(v);
    if constexpr (requires { data.adist(v); }) {
      const auto b = compute_boundary(f, index, adj, v);
      if (b.size() == 2) {
        const NodeId x = b[0] == p ? b[1] : b[0];
        if (data.adist(v) != oracle.compute_path_weight(v, x))
          return "adist mismatch at " + std::to_string(v);
      } else if (data.adist(v)) {
        return "1-cut node " + std::to_string(v) + " has an adist";
      }
    }
  }
  return std::nullopt;
}

/// droot(v) must be the underlying root exactly when it lies in T_v.
template <class F>
std::optional<std::string> check_droot(const F& f, const SimpleRooted& oracle) {
  const SubtreeIndex<F> index(f);
  for (NodeId v = 0; v < f.size(); ++v) {
    const NodeId r = oracle.find_root(v);
    const NodeId expected = index.contains(v, r) ? r : kNone;
    if (f.data().droot(v) != expected) return "droot mismatch at " + std::to_string(v);
  }
  return std::nullopt;
}

}  // namespace stt::testing

namespace stt::testing {

/// Builds a forest from parent handles over the given underlying edges.
template <class F>
F make_forest(std::size_t n, const std::vector<NodeId>& parents, const EdgeList& edges) {
  F f(n);
  assign_structure(f, std::span<const NodeId>(parents), std::span<const Edge>(edges));
  return f;
}

/// Sets pdist/adist (or pdist only) from oracle distances.
template <class F, class Oracle>
void init_annotations(F& f, Oracle& oracle) {
  const auto edges = underlying_edges(f);
  const SubtreeIndex<F> index(f);
  const auto adj = adjacency(f.size(), edges);
  for (NodeId v = 0; v < f.size(); ++v) {
    const NodeId p = f.parent(v);
    if (p == kNone) continue;
    const auto pd = oracle.compute_path_weight(v, p);
    if constexpr (requires { f.data().adist(v); }) {
      const auto b = compute_boundary(f, index, adj, v);
      std::optional<typename Oracle::value_type> ad;
      if (b.size() == 2) ad = oracle.compute_path_weight(v, b[0] == p ? b[1] : b[0]);
      f.data().set(v, pd, ad);
    } else {
      f.data().set_pdist(v, pd);
    }
  }
}

/// Hop distances from s.
inline std::vector<std::size_t> hop_distances(const std::vector<std::vector<NodeId>>& adj,
                                              NodeId s) {
  std::vector<std::size_t> d(adj.size(), SIZE_MAX);
  std::vector<NodeId> q{s};
  d[s] = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (NodeId w : adj[q[i]])
      if (d[w] == SIZE_MAX) {
        d[w] = d[q[i]] + 1;
        q.push_back(w);
      }
  return d;
}

}  // namespace stt::testing

namespace stt::testing {

/// Applies a rotation at v without any legality check: v takes p's place and
/// the children of v whose subtree borders p move to p. Designators are
/// recomputed by brute force.
inline SttForest<> forced_rotation(const SttForest<>& f, const EdgeList& edges, NodeId v) {
  const std::size_t n = f.size();
  std::vector<NodeId> parents(n);
  for (NodeId x = 0; x < n; ++x) parents[x] = f.parent(x);
  const NodeId p = parents[v], g = parents[p];
  const SubtreeIndex<SttForest<>> index(f);
  const auto adj = adjacency(n, edges);
  for (NodeId c = 0; c < n; ++c) {
    if (parents[c] != v) continue;
    const auto b = compute_boundary(f, index, adj, c);
    if (std::find(b.begin(), b.end(), p) != b.end()) parents[c] = p;
  }
  parents[v] = g;
  parents[p] = v;
  SttForest<> out(n);
  assign_structure(out, std::span<const NodeId>(parents), std::span<const Edge>(edges));
  return out;
}

// A random 2-cut search tree on a random tree: start from a rooting and apply
// random legal rotations.
inline SttForest<> random_stt(std::size_t n, Rng& rng, EdgeList& edges) {
  std::vector<NodeId> code(n - 2);
  for (NodeId& x : code) x = static_cast<NodeId>(rng.below(n));
  edges = prufer_to_edges(code, n);
  const auto adj = adjacency(n, edges);
  std::vector<NodeId> parents(n, kNone);
  std::vector<NodeId> q{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (NodeId w : adj[q[i]])
      if (!seen[w]) {
        seen[w] = true;
        parents[w] = q[i];
        q.push_back(w);
      }
  auto f = make_forest<SttForest<>>(n, parents, edges);
  for (std::size_t i = 0; i < 20 * n; ++i) {
    const auto v = static_cast<NodeId>(rng.below(n));
    if (!f.is_root(v) && f.can_rotate(v)) f.rotate(v);
  }
  return f;
}

}  // namespace stt::testing
