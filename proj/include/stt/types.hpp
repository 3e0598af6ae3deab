#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace stt {

/// Dense node handle in [0, n). Handles are fixed for the lifetime of a forest.
using NodeId = std::uint32_t;

/// Marks an absent parent or child designator.
inline constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

/// Raised when a caller violates an operation's precondition (linking two
/// connected nodes, cutting a missing edge, rotating a root, ...).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Undirected edge, normalized so that first < second.
struct Edge {
  NodeId first;
  NodeId second;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr Edge make_edge(NodeId a, NodeId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

inline void expect(bool cond, const char* what) {
  if (!cond) [[unlikely]]
    throw PreconditionError(what);
}

}  // namespace stt
