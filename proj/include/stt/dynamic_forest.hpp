#pragma once

// Unrooted dynamic forests on top of 2-cut search forests.
//
// Link brings both endpoints to the roots of their search trees and hangs u
// below v. Cut and path queries either rely on stability (the previous root
// ends at depth <= 6 on a 1-cut root path) or on NodeBelowRoot.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "stt/heuristics.hpp"
#include "stt/stt_forest.hpp"
#include "stt/types.hpp"
#include "stt/weights.hpp"

namespace stt {

/// The distance annotations of a data maintainer; for a DataList they are the
/// first entry.
template <class Data>
const auto& path_data_of(const Data& d) {
  if constexpr (requires { d.pdist(NodeId{}); })
    return d;
  else
    return d.template get<0>();
}

template <class Strategy, bool Stable, MonoidWeight M = UnitWeight,
          class Data = default_path_data_t<M>>
class SttDynamicForest {
 public:
  using strategy_type = Strategy;
  using weight_type = M;
  using value_type = typename M::value_type;
  using forest_type = SttForest<Data>;

  static constexpr bool kStable = Stable;

  SttDynamicForest() = default;
  explicit SttDynamicForest(std::size_t n) : f_(n) {}

  std::size_t size() const { return f_.size(); }

  /// Adds edge {u, v} of weight w. u and v must be in different trees.
  void link(NodeId u, NodeId v, const value_type& w = M::identity()) {
    expect(u != v, "link: self loop");
    node_to_root<Strategy>(f_, u);
    node_to_root<Strategy>(f_, v);
    expect(f_.is_root(u), "link: nodes are already connected");
    f_.attach(u, v, w);
  }

  /// Removes edge {u, v}, which must exist.
  void cut(NodeId u, NodeId v) {
    expect(u != v, "cut: self loop");
    if constexpr (Stable) {
      node_to_root<Strategy>(f_, u);
      node_to_root<Strategy>(f_, v);
    } else {
      node_to_root<Strategy>(f_, v);
      expect(f_.root_of(u) == v, "cut: nodes are not connected");
      node_below<Strategy>(f_, u, v);
    }
    // With v the root, u a 1-cut child and no child of u reaching v, the
    // edge {u, v} exists.
    expect(f_.parent(u) == v && !f_.is_separator_hint(u, v) &&
               f_.dsep_child(u) == kNone,
           "cut: edge does not exist");
    f_.detach(u);
  }

  /// Combined weight of the u-v path, or nullopt if u and v are disconnected.
  std::optional<value_type> compute_path_weight(NodeId u, NodeId v) {
    if (u == v) return M::identity();
    if constexpr (Stable) {
      node_to_root<Strategy>(f_, u);
      node_to_root<Strategy>(f_, v);
      // The previous root u now sits at depth <= 6 on a 1-cut root path whose
      // order matches the underlying u-v path.
      value_type acc = M::identity();
      for (NodeId x = u; x != v;) {
        const NodeId p = f_.parent(x);
        if (p == kNone) return std::nullopt;
        acc = M::combine(acc, *path_data_of(f_.data()).pdist(x));
        x = p;
      }
      return acc;
    } else {
      node_to_root<Strategy>(f_, v);
      const NodeId r = f_.root_of(u);
      if (r == u) return std::nullopt;
      node_below<Strategy>(f_, u, r);
      if (r != v) return std::nullopt;
      return *path_data_of(f_.data()).pdist(u);
    }
  }

  bool connected(NodeId u, NodeId v) { return compute_path_weight(u, v).has_value(); }

  forest_type& stt() { return f_; }
  const forest_type& stt() const { return f_; }
  std::uint64_t rotations() const { return f_.rotation_count(); }

 private:
  forest_type f_;
};

template <class Strategy, MonoidWeight M = UnitWeight, class Data = default_path_data_t<M>>
using StableForest = SttDynamicForest<Strategy, true, M, Data>;

template <class Strategy, MonoidWeight M = UnitWeight, class Data = default_path_data_t<M>>
using NonStableForest = SttDynamicForest<Strategy, false, M, Data>;

}  // namespace stt
