#pragma once

// Incremental minimum spanning forests over a dynamic forest with max-edge
// path weights, and Kruskal's algorithm as the offline reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stt/types.hpp"
#include "stt/weights.hpp"

namespace stt::msf {

struct WeightedEdge {
  NodeId u;
  NodeId v;
  std::uint64_t w;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

enum class EventKind : std::uint8_t { Insert, Decrease };

struct EdgeEvent {
  NodeId u;
  NodeId v;
  std::uint64_t w;
  EventKind kind = EventKind::Insert;

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

struct KruskalResult {
  std::vector<WeightedEdge> edges;
  std::uint64_t total = 0;
};

KruskalResult kruskal(std::size_t n, std::span<const WeightedEdge> edges);

/// The graph described by an event stream: each pair with its last weight.
std::vector<WeightedEdge> final_edges(std::span<const EdgeEvent> events);

/// Random insertions of m edges with weights in [1, 2^32) on n nodes.
std::vector<EdgeEvent> gen_random_events(std::size_t n, std::size_t m, std::uint64_t seed);

template <class Forest>
class MsfState {
 public:
  explicit MsfState(std::size_t n) : forest_(n) {}

  /// Adds edge {u, v}. For a pair seen before this acts as a decrease when w
  /// is smaller and is ignored otherwise.
  void insert(NodeId u, NodeId v, std::uint64_t w) {
    if (u == v) return;
    const std::uint64_t k = key(u, v);
    if (auto it = ids_.find(k); it != ids_.end()) {
      if (w < edges_[it->second].w) decrease_id(it->second, w);
      return;
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    ids_.emplace(k, id);
    edges_.push_back({u, v, w});
    in_forest_.push_back(false);
    try_add(id);
  }

  /// Lowers the weight of a previously inserted pair.
  void decrease(NodeId u, NodeId v, std::uint64_t w) {
    const auto it = ids_.find(key(u, v));
    expect(it != ids_.end(), "msf_decrease: pair was never inserted");
    expect(w < edges_[it->second].w, "msf_decrease: weight does not decrease");
    decrease_id(it->second, w);
  }

  void apply(const EdgeEvent& e) {
    if (e.kind == EventKind::Insert)
      insert(e.u, e.v, e.w);
    else
      decrease(e.u, e.v, e.w);
  }

  std::uint64_t total_weight() const { return total_; }
  std::size_t forest_size() const { return forest_edges_; }

  std::vector<WeightedEdge> forest_edges() const {
    std::vector<WeightedEdge> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (in_forest_[i]) out.push_back(edges_[i]);
    return out;
  }

  Forest& forest() { return forest_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

 private:
  static std::uint64_t key(NodeId u, NodeId v) {
    const Edge e = make_edge(u, v);
    return (std::uint64_t{e.first} << 32) | e.second;
  }

  void decrease_id(EdgeId id, std::uint64_t w) {
    WeightedEdge& e = edges_[id];
    if (in_forest_[id]) remove(id);
    e.w = w;
    try_add(id);
  }

  void remove(EdgeId id) {
    const WeightedEdge& e = edges_[id];
    forest_.cut(e.u, e.v);
    in_forest_[id] = false;
    total_ -= e.w;
    --forest_edges_;
  }

  void add(EdgeId id) {
    const WeightedEdge& e = edges_[id];
    forest_.link(e.u, e.v, MaxEdgeValue{e.w, id});
    in_forest_[id] = true;
    total_ += e.w;
    ++forest_edges_;
  }

  void try_add(EdgeId id) {
    const WeightedEdge& e = edges_[id];
    const auto heaviest = forest_.compute_path_weight(e.u, e.v);
    if (!heaviest) {
      add(id);
    } else if (heaviest->weight > e.w) {
      remove(heaviest->witness);
      add(id);
    }
  }

  Forest forest_;
  std::vector<WeightedEdge> edges_;
  std::vector<bool> in_forest_;
  std::unordered_map<std::uint64_t, EdgeId> ids_;
  std::uint64_t total_ = 0;
  std::size_t forest_edges_ = 0;
};

struct MsfReport {
  std::string impl;
  std::size_t n = 0;
  std::size_t m = 0;
  double us_per_edge = 0.0;
  std::uint64_t total_weight = 0;
};

/// Dynamic-forest implementations usable for MSF, plus "kruskal".
std::vector<std::string> msf_impl_names();

MsfReport run_msf(std::string_view impl, std::size_t n, std::span<const EdgeEvent> events);

}  // namespace stt::msf
