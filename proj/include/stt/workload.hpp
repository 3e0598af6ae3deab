#pragma once

// Seed-deterministic query scripts.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stt/types.hpp"

namespace stt::bench {

enum class OpKind : std::uint8_t {
  Link,
  Cut,
  PathWeight,
  RootedLink,
  RootedCut,
  Lca,
  Evert,
  FindRoot,
};

std::string_view to_string(OpKind kind);

struct Op {
  OpKind kind;
  NodeId u;
  NodeId v;  // unused by RootedCut, Evert and FindRoot
  std::uint64_t w = 1;

  friend bool operator==(const Op&, const Op&) = default;
};

struct QueryScript {
  std::string workload;
  std::size_t n = 0;
  std::vector<Op> ops;

  /// True iff the script uses the rooted interface.
  bool rooted() const;
  bool uses_evert() const;
};

/// Largest weight drawn for Link operations; keeps sums of a path far from
/// overflow.
inline constexpr std::uint64_t kMaxLinkWeight = std::uint64_t{1} << 20;

/// Uniformly random connectivity: per query a uniform pair u != v; Link if
/// disconnected, otherwise PathWeight with probability p_path, else Cut of a
/// uniform edge on the u-v path.
QueryScript gen_urc(std::size_t n, std::size_t m, double p_path, std::uint64_t seed);

/// Path v_0 ... v_{n-1} followed by PathWeight(v_j, v_{n-1}) for each i with
/// j = clamp(i + floor(x), 0, n - 1), x ~ Normal(0, sigma).
QueryScript gen_noisy_degenerate(std::size_t n, double sigma, std::uint64_t seed);
QueryScript gen_degenerate(std::size_t n);

/// Rooted forest queries: RootedCut (or Evert) of a random node, else
/// RootedLink of a root below a node of another tree, else Lca.
QueryScript gen_lca(std::size_t n, std::size_t m, bool with_evert, std::uint64_t seed);

/// Share of each operation kind in percent, indexed by OpKind.
std::vector<double> op_mix(const QueryScript& script);

}  // namespace stt::bench
