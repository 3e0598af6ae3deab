#pragma once

// Edge-weight strategies and the per-node distance annotations maintained
// under rotations.
//
// A weight strategy is a stateless type exposing `value_type`, `identity()`
// and a commutative, associative `combine(a, b)`. Strategies that also expose
// `inverse(a)` are groups and get the cheaper one-field maintainer.
//
// Distances that are "infinite" (to a nonexistent node) are absent optionals.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "stt/stt_forest.hpp"
#include "stt/types.hpp"

namespace stt {

template <class M>
concept MonoidWeight = requires(const typename M::value_type& a) {
  typename M::value_type;
  { M::identity() } -> std::convertible_to<typename M::value_type>;
  { M::combine(a, a) } -> std::convertible_to<typename M::value_type>;
};

template <class M>
concept GroupWeight = MonoidWeight<M> && requires(const typename M::value_type& a) {
  { M::inverse(a) } -> std::convertible_to<typename M::value_type>;
};

/// Empty weight: path queries degenerate to connectivity.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) = default;
};

struct UnitWeight {
  using value_type = Unit;
  static constexpr Unit identity() { return {}; }
  static constexpr Unit combine(Unit, Unit) { return {}; }
  static constexpr Unit inverse(Unit) { return {}; }
};

/// Signed sums with two's-complement wraparound.
struct SumWeight {
  using value_type = std::int64_t;
  static constexpr value_type identity() { return 0; }
  static constexpr value_type combine(value_type a, value_type b) {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) +
                                   static_cast<std::uint64_t>(b));
  }
  static constexpr value_type inverse(value_type a) {
    return static_cast<value_type>(0 - static_cast<std::uint64_t>(a));
  }
};

using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct MaxEdgeValue {
  std::uint64_t weight = 0;
  EdgeId witness = kNoEdge;

  friend constexpr bool operator==(const MaxEdgeValue&, const MaxEdgeValue&) = default;
};

/// Maximum weight together with an edge attaining it. Ties go to the smaller
/// edge id, so combine is commutative and a path has the same weight read in
/// either direction. The identity ranks below every real edge, including
/// weight-0 ones.
struct MaxEdge {
  using value_type = MaxEdgeValue;
  static constexpr value_type identity() { return {}; }
  static constexpr value_type combine(const value_type& a, const value_type& b) {
    if (b.weight != a.weight) return b.weight > a.weight ? b : a;
    return b.witness < a.witness ? b : a;
  }
};

/// Annotation store for empty weights: nothing to keep.
template <MonoidWeight M>
class NoPathData : public NoData {
 public:
  using value_type = typename M::value_type;
  std::optional<value_type> pdist(NodeId) const { return M::identity(); }
};

/// pdist(v) = distance from v to its parent; absent at roots.
template <GroupWeight G>
class GroupPathData {
 public:
  using value_type = typename G::value_type;

  void resize(std::size_t n) { pdist_.assign(n, std::nullopt); }

  const std::optional<value_type>& pdist(NodeId v) const { return pdist_[v]; }
  void set_pdist(NodeId v, std::optional<value_type> w) { pdist_[v] = w; }

  void on_rotate(const RotationContext& ctx) {
    const value_type pv = *pdist_[ctx.v];
    if (ctx.c != kNone)  // c lies between v and p
      pdist_[ctx.c] = G::combine(pv, G::inverse(*pdist_[ctx.c]));
    if (ctx.p_was_root())
      pdist_[ctx.v].reset();
    else if (ctx.v_direct)  // v lies between p and g
      pdist_[ctx.v] = G::combine(*pdist_[ctx.p], G::inverse(pv));
    else  // p lies between v and g
      pdist_[ctx.v] = G::combine(pv, *pdist_[ctx.p]);
    pdist_[ctx.p] = pv;
  }

  void on_attach(NodeId u, NodeId, const value_type& w) { pdist_[u] = w; }
  void on_detach(NodeId u) { pdist_[u].reset(); }

 private:
  std::vector<std::optional<value_type>> pdist_;
};

/// pdist(v) as above; adist(v) = distance from v to the boundary vertex of
/// its subtree that is not its parent, absent unless v is a separator.
template <MonoidWeight M>
class MonoidPathData {
 public:
  using value_type = typename M::value_type;

  void resize(std::size_t n) {
    pdist_.assign(n, std::nullopt);
    adist_.assign(n, std::nullopt);
  }

  const std::optional<value_type>& pdist(NodeId v) const { return pdist_[v]; }
  const std::optional<value_type>& adist(NodeId v) const { return adist_[v]; }
  void set(NodeId v, std::optional<value_type> pd, std::optional<value_type> ad) {
    pdist_[v] = pd;
    adist_[v] = ad;
  }

  void on_rotate(const RotationContext& ctx) {
    const NodeId v = ctx.v, p = ctx.p;
    // c trades its parent and grandparent, both of which stay boundary.
    if (ctx.c != kNone) std::swap(pdist_[ctx.c], adist_[ctx.c]);

    const std::optional<value_type> pv = pdist_[v], av = adist_[v];
    const std::optional<value_type> pp = pdist_[p], ap = adist_[p];
    pdist_[p] = pv;
    if (ctx.p_was_root()) {
      pdist_[v].reset();
      adist_[v].reset();
      adist_[p].reset();
    } else if (ctx.v_direct) {
      pdist_[v] = av;
      if (ctx.p_separator) {
        // Underlying path a, p, v, g; adist(p) already measures p..a.
        adist_[v] = M::combine(*pv, *ap);
      } else {
        adist_[v].reset();
        adist_[p].reset();
      }
    } else {
      pdist_[v] = M::combine(*pv, *pp);
      adist_[p] = pp;
      if (!ctx.p_separator) adist_[v].reset();
    }
  }

  void on_attach(NodeId u, NodeId, const value_type& w) {
    pdist_[u] = w;
    adist_[u].reset();
  }
  void on_detach(NodeId u) {
    pdist_[u].reset();
    adist_[u].reset();
  }

 private:
  std::vector<std::optional<value_type>> pdist_;
  std::vector<std::optional<value_type>> adist_;
};

template <MonoidWeight M>
struct DefaultPathData {
  using type = MonoidPathData<M>;
};
template <MonoidWeight M>
  requires std::is_empty_v<typename M::value_type>
struct DefaultPathData<M> {
  using type = NoPathData<M>;
};
template <GroupWeight M>
  requires(!std::is_empty_v<typename M::value_type>)
struct DefaultPathData<M> {
  using type = GroupPathData<M>;
};

template <MonoidWeight M>
using default_path_data_t = typename DefaultPathData<M>::type;

}  // namespace stt
