#include "stt/msf.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "stt/dynamic_forest.hpp"
#include "stt/heuristics.hpp"
#include "stt/link_cut.hpp"
#include "stt/one_cut.hpp"
#include "stt/random.hpp"

namespace stt::msf {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

KruskalResult kruskal(std::size_t n, std::span<const WeightedEdge> edges) {
  std::vector<WeightedEdge> sorted(edges.begin(), edges.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) { return a.w < b.w; });
  UnionFind uf(n);
  KruskalResult out;
  for (const WeightedEdge& e : sorted) {
    if (e.u == e.v || !uf.unite(e.u, e.v)) continue;
    out.edges.push_back(e);
    out.total += e.w;
  }
  return out;
}

std::vector<WeightedEdge> final_edges(std::span<const EdgeEvent> events) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<WeightedEdge> out;
  for (const EdgeEvent& e : events) {
    if (e.u == e.v) continue;
    const Edge p = make_edge(e.u, e.v);
    const std::uint64_t k = (std::uint64_t{p.first} << 32) | p.second;
    auto [it, fresh] = index.emplace(k, out.size());
    if (fresh)
      out.push_back({p.first, p.second, e.w});
    else
      out[it->second].w = std::min(out[it->second].w, e.w);
  }
  return out;
}

std::vector<EdgeEvent> gen_random_events(std::size_t n, std::size_t m, std::uint64_t seed) {
  expect(n >= 2, "gen_random_events: need at least two nodes");
  Rng rng(seed);
  std::vector<EdgeEvent> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<NodeId>(rng.below(n));
    auto v = static_cast<NodeId>(rng.below(n - 1));
    if (v >= u) ++v;
    out.push_back({u, v, 1 + rng.below((std::uint64_t{1} << 32) - 1), EventKind::Insert});
  }
  return out;
}

namespace {

using MsfRunner = std::function<std::uint64_t(std::size_t, std::span<const EdgeEvent>)>;

template <class F>
MsfRunner make_msf_runner() {
  return [](std::size_t n, std::span<const EdgeEvent> events) {
    MsfState<F> state(n);
    for (const EdgeEvent& e : events) state.apply(e);
    return state.total_weight();
  };
}

struct MsfEntry {
  std::string_view name;
  MsfRunner run;
};

std::vector<MsfEntry> msf_catalog() {
  return {
      {"link-cut", make_msf_runner<LinkCutForest<MaxEdge, true>>()},
      {"greedy-splay", make_msf_runner<NonStableForest<GreedySplayTT, MaxEdge>>()},
      {"stable-greedy-splay", make_msf_runner<StableForest<GreedySplayTT, MaxEdge>>()},
      {"2p-splay", make_msf_runner<NonStableForest<TwoPassSplayTT, MaxEdge>>()},
      {"stable-2p-splay", make_msf_runner<StableForest<TwoPassSplayTT, MaxEdge>>()},
      {"l2p-splay", make_msf_runner<NonStableForest<LocalTwoPassSplayTT, MaxEdge>>()},
      {"stable-l2p-splay", make_msf_runner<StableForest<LocalTwoPassSplayTT, MaxEdge>>()},
      {"mtr", make_msf_runner<NonStableForest<MoveToRootTT, MaxEdge>>()},
      {"stable-mtr", make_msf_runner<StableForest<MoveToRootTT, MaxEdge>>()},
      {"1-cut", make_msf_runner<OneCutForest<MaxEdge>>()},
      {"kruskal",
       [](std::size_t n, std::span<const EdgeEvent> events) {
         const std::vector<WeightedEdge> edges = final_edges(events);
         return kruskal(n, edges).total;
       }},
  };
}

}  // namespace

std::vector<std::string> msf_impl_names() {
  std::vector<std::string> out;
  for (const MsfEntry& e : msf_catalog()) out.emplace_back(e.name);
  return out;
}

MsfReport run_msf(std::string_view impl, std::size_t n, std::span<const EdgeEvent> events) {
  for (MsfEntry& e : msf_catalog()) {
    if (e.name != impl) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = e.run(n, events);
    const auto t1 = std::chrono::steady_clock::now();
    const double us = std::chrono::duration<double, std::micro>(t1 - t0).count();
    return MsfReport{std::string(impl), n, events.size(),
                     us / static_cast<double>(std::max<std::size_t>(1, events.size())), total};
  }
  throw std::invalid_argument("unknown MSF implementation '" + std::string(impl) + "'");
}

}  // namespace stt::msf
