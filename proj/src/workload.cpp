#include "stt/workload.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "stt/random.hpp"

namespace stt::bench {

std::string_view to_string(OpKind kind) {
  static constexpr std::array<std::string_view, 8> names = {
      "link", "cut", "path_weight", "rooted_link", "rooted_cut", "lca", "evert", "find_root"};
  return names[static_cast<std::size_t>(kind)];
}

bool QueryScript::rooted() const {
  return std::any_of(ops.begin(), ops.end(), [](const Op& op) {
    return op.kind == OpKind::RootedLink || op.kind == OpKind::RootedCut ||
           op.kind == OpKind::Lca || op.kind == OpKind::Evert || op.kind == OpKind::FindRoot;
  });
}

bool QueryScript::uses_evert() const {
  return std::any_of(ops.begin(), ops.end(),
                     [](const Op& op) { return op.kind == OpKind::Evert; });
}

namespace {

// Shadow forest as a rooting by parent pointers.
class Rooting {
 public:
  explicit Rooting(std::size_t n) : parent_(n, kNone) {}

  NodeId parent(NodeId v) const { return parent_[v]; }
  void set_parent(NodeId v, NodeId p) { parent_[v] = p; }

  NodeId root(NodeId v) const {
    while (parent_[v] != kNone) v = parent_[v];
    return v;
  }

  /// Makes v the root; returns the previous root.
  NodeId reroot(NodeId v) {
    NodeId prev = kNone, x = v;
    while (x != kNone) {
      const NodeId next = parent_[x];
      parent_[x] = prev;
      prev = x;
      x = next;
    }
    return prev;
  }

 private:
  std::vector<NodeId> parent_;
};

NodeId pick(Rng& rng, std::size_t n) { return static_cast<NodeId>(rng.below(n)); }

std::pair<NodeId, NodeId> pick_pair(Rng& rng, std::size_t n) {
  const NodeId u = pick(rng, n);
  NodeId v = pick(rng, n - 1);
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

QueryScript gen_urc(std::size_t n, std::size_t m, double p_path, std::uint64_t seed) {
  expect(n >= 2, "gen_urc: need at least two nodes");
  expect(p_path >= 0.0 && p_path <= 1.0, "gen_urc: p_path must lie in [0, 1]");
  Rng rng(seed);
  Rooting shadow(n);
  QueryScript s{"urc", n, {}};
  s.ops.reserve(m);
  std::vector<NodeId> path;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [u, v] = pick_pair(rng, n);
    shadow.reroot(u);
    path.clear();
    NodeId x = v;
    for (; shadow.parent(x) != kNone; x = shadow.parent(x)) path.push_back(x);
    if (x != u) {
      const std::uint64_t w = 1 + rng.below(kMaxLinkWeight);
      shadow.set_parent(u, v);
      s.ops.push_back({OpKind::Link, u, v, w});
    } else if (rng.bernoulli(p_path)) {
      s.ops.push_back({OpKind::PathWeight, u, v});
    } else {
      const NodeId a = path[rng.below(path.size())];
      const NodeId b = shadow.parent(a);
      shadow.set_parent(a, kNone);
      s.ops.push_back({OpKind::Cut, a, b});
    }
  }
  return s;
}

QueryScript gen_noisy_degenerate(std::size_t n, double sigma, std::uint64_t seed) {
  expect(n >= 2, "gen_degenerate: need at least two nodes");
  expect(sigma >= 0.0, "gen_degenerate: sigma must be non-negative");
  Rng rng(seed);
  QueryScript s{sigma == 0.0 ? "degenerate" : "noisy-degenerate", n, {}};
  s.ops.reserve(2 * n - 1);
  for (NodeId i = 0; i + 1 < n; ++i) s.ops.push_back({OpKind::Link, i, i + 1, 1});
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (std::int64_t i = 0; i <= last; ++i) {
    std::int64_t j = i;
    if (sigma > 0.0) j += static_cast<std::int64_t>(std::floor(sigma * rng.normal()));
    j = std::clamp<std::int64_t>(j, 0, last);
    s.ops.push_back({OpKind::PathWeight, static_cast<NodeId>(j), static_cast<NodeId>(last)});
  }
  return s;
}

QueryScript gen_degenerate(std::size_t n) { return gen_noisy_degenerate(n, 0.0, 0); }

QueryScript gen_lca(std::size_t n, std::size_t m, bool with_evert, std::uint64_t seed) {
  expect(n >= 2, "gen_lca: need at least two nodes");
  Rng rng(seed);
  Rooting shadow(n);
  // Non-root nodes with O(1) removal by position.
  std::vector<NodeId> non_root;
  std::vector<std::size_t> pos(n, SIZE_MAX);
  const auto add = [&](NodeId v) {
    pos[v] = non_root.size();
    non_root.push_back(v);
  };
  const auto remove = [&](NodeId v) {
    const std::size_t i = pos[v];
    non_root[i] = non_root.back();
    pos[non_root[i]] = i;
    non_root.pop_back();
    pos[v] = SIZE_MAX;
  };

  QueryScript s{with_evert ? "lca-evert" : "lca", n, {}};
  s.ops.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double p_cut = 0.5 * static_cast<double>(non_root.size()) / static_cast<double>(n - 1);
    if (rng.bernoulli(p_cut)) {
      if (with_evert && rng.bernoulli(0.5)) {
        const NodeId v = pick(rng, n);
        const NodeId r = shadow.reroot(v);
        if (r != v) {
          remove(v);
          add(r);
        }
        s.ops.push_back({OpKind::Evert, v, kNone});
      } else {
        const NodeId v = non_root[rng.below(non_root.size())];
        shadow.set_parent(v, kNone);
        remove(v);
        s.ops.push_back({OpKind::RootedCut, v, kNone});
      }
      continue;
    }
    const auto [u, v] = pick_pair(rng, n);
    const NodeId ru = shadow.root(u);
    if (ru != shadow.root(v)) {
      shadow.set_parent(ru, v);
      add(ru);
      s.ops.push_back({OpKind::RootedLink, ru, v});
    } else {
      s.ops.push_back({OpKind::Lca, u, v});
    }
  }
  return s;
}

std::vector<double> op_mix(const QueryScript& script) {
  std::vector<double> mix(8, 0.0);
  for (const Op& op : script.ops) mix[static_cast<std::size_t>(op.kind)] += 1.0;
  if (!script.ops.empty())
    for (double& x : mix) x = 100.0 * x / static_cast<double>(script.ops.size());
  return mix;
}

}  // namespace stt::bench
