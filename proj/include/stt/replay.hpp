#pragma once

// Executes a query script against any forest implementation and folds the
// query answers into a checksum.

#include <cstdint>
#include <optional>
#include <type_traits>

#include "stt/types.hpp"
#include "stt/weights.hpp"
#include "stt/workload.hpp"

namespace stt::bench {

inline constexpr std::uint64_t kAbsent = ~std::uint64_t{0};

struct Checksum {
  std::uint64_t value = 0xcbf29ce484222325ULL;
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      value ^= (x >> (8 * i)) & 0xff;
      value *= 0x100000001b3ULL;
    }
  }
};

/// The weight a Link operation carries under strategy M. Max-edge weights use
/// the operation index as witness.
template <MonoidWeight M>
typename M::value_type link_weight(const Op& op, std::size_t index) {
  using V = typename M::value_type;
  if constexpr (std::is_same_v<V, MaxEdgeValue>)
    return V{op.w, static_cast<EdgeId>(index)};
  else if constexpr (std::is_empty_v<V>)
    return V{};
  else
    return static_cast<V>(op.w);
}

/// Canonical answer encoding. Max-edge results encode only the weight.
template <MonoidWeight M>
std::uint64_t encode(const std::optional<typename M::value_type>& r) {
  using V = typename M::value_type;
  if (!r) return kAbsent;
  if constexpr (std::is_same_v<V, MaxEdgeValue>)
    return r->weight;
  else if constexpr (std::is_empty_v<V>)
    return 1;
  else
    return static_cast<std::uint64_t>(*r);
}

inline std::uint64_t encode_node(std::optional<NodeId> v) { return v ? *v : kAbsent; }

template <class F>
std::uint64_t replay_unrooted(F& f, const QueryScript& s) {
  using M = typename F::weight_type;
  Checksum sum;
  for (std::size_t i = 0; i < s.ops.size(); ++i) {
    const Op& op = s.ops[i];
    switch (op.kind) {
      case OpKind::Link:
        f.link(op.u, op.v, link_weight<M>(op, i));
        break;
      case OpKind::Cut:
        f.cut(op.u, op.v);
        break;
      case OpKind::PathWeight:
        sum.add(encode<M>(f.compute_path_weight(op.u, op.v)));
        break;
      default:
        throw PreconditionError("replay: rooted operation in an unrooted script");
    }
  }
  return sum.value;
}

template <class F>
std::uint64_t replay_rooted(F& f, const QueryScript& s) {
  Checksum sum;
  for (const Op& op : s.ops) {
    switch (op.kind) {
      case OpKind::RootedLink:
        if constexpr (requires { f.rooted_link(op.u, op.v); })
          f.rooted_link(op.u, op.v);
        else
          f.link(op.u, op.v);
        break;
      case OpKind::RootedCut:
        if constexpr (requires { f.rooted_cut(op.u); })
          f.rooted_cut(op.u);
        else
          f.cut(op.u);
        break;
      case OpKind::Lca:
        sum.add(encode_node(f.lca(op.u, op.v)));
        break;
      case OpKind::FindRoot:
        sum.add(f.find_root(op.u));
        break;
      case OpKind::Evert:
        if constexpr (requires { f.evert(op.u); })
          f.evert(op.u);
        else
          throw PreconditionError("replay: implementation does not support evert");
        break;
      default:
        throw PreconditionError("replay: unrooted operation in a rooted script");
    }
  }
  return sum.value;
}

}  // namespace stt::bench
