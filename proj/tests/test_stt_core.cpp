#include <doctest.h>

#include <algorithm>

#include "stt/oracle.hpp"
#include "stt/stt_forest.hpp"
#include "stt/validate.hpp"
#include "support.hpp"

using namespace stt;
using namespace stt::testing;

namespace {

// Star with center s and leaves x, y, z; search tree x -> y -> s -> z.
constexpr NodeId X = 0, Y = 1, S = 2, Z = 3;
const EdgeList kStarEdges = {make_edge(S, X), make_edge(S, Y), make_edge(S, Z)};
const std::vector<NodeId> kStarParents = {kNone, X, Y, S};

SttForest<> star4() { return make_forest<SttForest<>>(4, kStarParents, kStarEdges); }

EdgeList path_edges(std::size_t n) {
  EdgeList e;
  for (NodeId i = 0; i + 1 < n; ++i) e.push_back(make_edge(i, i + 1));
  return e;
}

}  // namespace

TEST_CASE("new forests are edgeless singletons") {
  SttForest<> empty(0);
  CHECK(empty.size() == 0);
  CHECK(validate(empty));

  SttForest<> one(1);
  CHECK(one.is_root(0));
  CHECK(one.dsep_child(0) == kNone);
  CHECK(one.isep_child(0) == kNone);

  SttForest<> three(3);
  CHECK(underlying_edges(three).empty());
  for (NodeId v = 0; v < 3; ++v) CHECK(compute_boundary(three, v).empty());
}

TEST_CASE("separator predicates on the star fixture") {
  const auto f = star4();
  REQUIRE(validate(f));
  CHECK(f.dsep_child(Y) == S);
  CHECK(f.is_separator(S));
  CHECK_FALSE(f.is_separator(Z));
  CHECK_FALSE(f.is_separator(X));
  CHECK(f.is_direct_separator(S));
  CHECK_FALSE(f.is_indirect_separator(S));
  CHECK_FALSE(f.is_direct_separator(X));
  CHECK_FALSE(f.is_indirect_separator(X));
  CHECK(compute_boundary(f, S) == std::vector<NodeId>{X, Y});
  CHECK(compute_boundary(f, X).empty());
  CHECK(underlying_edges(f) == EdgeList{make_edge(X, S), make_edge(Y, S), make_edge(S, Z)});
}

TEST_CASE("indirect separator on a path") {
  // Path 0-1-2-3-4; search tree 0 -> 3 -> {2 -> 1, 4}.
  const std::vector<NodeId> parents = {kNone, 2, 3, 0, 3};
  const auto f = make_forest<SttForest<>>(5, parents, path_edges(5));
  REQUIRE(validate(f));
  CHECK(compute_boundary(f, 1) == std::vector<NodeId>{0, 2});
  CHECK(f.is_indirect_separator(1));
  CHECK_FALSE(f.is_direct_separator(1));
  CHECK(f.is_direct_separator(2));
}

TEST_CASE("can_rotate on the star fixture") {
  const auto f = star4();
  CHECK_FALSE(f.can_rotate(Z));
  CHECK(f.can_rotate(S));
  CHECK(f.can_rotate(Y));
  CHECK_THROWS_AS(f.can_rotate(X), PreconditionError);
}

TEST_CASE("rotate: two nodes") {
  auto f = make_forest<SttForest<>>(2, {kNone, 0}, {make_edge(0, 1)});
  f.rotate(1);
  CHECK(f.is_root(1));
  CHECK(f.parent(0) == 1);
  CHECK(f.dsep_child(1) == kNone);
  CHECK(f.isep_child(1) == kNone);
  CHECK(f.rotation_count() == 1);
  CHECK(validate(f));
}

TEST_CASE("rotate: star fixture keeps the underlying tree") {
  auto f = star4();
  const auto before = underlying_edges(f);
  f.rotate(S);
  CHECK(f.parent(S) == X);
  CHECK(f.parent(Y) == S);
  CHECK(f.parent(Z) == S);
  CHECK_FALSE(f.is_separator(Z));
  CHECK(underlying_edges(f) == before);
  CHECK(validate(f, &before));
}

TEST_CASE("rotate: direct separator below a separator becomes its parent's parent") {
  // Path a-p-v-g; search tree a -> g -> p -> v.
  constexpr NodeId A = 0, P = 1, V = 2, G = 3;
  const EdgeList edges = {make_edge(A, P), make_edge(P, V), make_edge(V, G)};
  auto f = make_forest<SttForest<>>(4, {kNone, G, P, A}, edges);
  REQUIRE(validate(f));
  REQUIRE(f.is_direct_separator(V));
  REQUIRE(f.is_separator(P));
  f.rotate(V);
  CHECK(f.parent(V) == G);
  CHECK(f.isep_child(V) == P);
  CHECK(compute_boundary(f, P) == std::vector<NodeId>{A, V});
  CHECK(validate(f, &edges));
}

TEST_CASE("rotate rejects the forbidden case") {
  auto f = star4();
  CHECK_THROWS_AS(f.rotate(Z), PreconditionError);
  CHECK(validate(f));
  CHECK_THROWS_AS(f.rotate(X), PreconditionError);
}

TEST_CASE("validate reports injected faults") {
  auto f = star4();
  f.set_fields(Y, X, kNone, S);  // s is direct, not indirect
  CHECK_FALSE(validate(f));
  CHECK_FALSE(validate(f, &kStarEdges));

  auto d = star4();
  d.set_fields(Z, S, kNone, kNone);
  d.set_fields(S, Y, Z, kNone);  // names a 1-cut child as a separator
  const auto r = validate(d, &kStarEdges);
  CHECK_FALSE(r);
  CHECK_FALSE(r.message.empty());

  auto e = star4();
  e.set_fields(Y, X, S, S);
  CHECK(validate(e).message.find("identical designators") != std::string::npos);
  e.set_fields(Y, X, Z, kNone);
  CHECK(validate(e).message.find("non-child") != std::string::npos);

  auto g = star4();
  g.set_fields(X, Z, kNone, kNone);  // cycle
  CHECK_FALSE(validate(g));

  auto h = star4();
  const EdgeList wrong = {make_edge(X, Y), make_edge(S, Y), make_edge(S, Z)};
  CHECK_FALSE(validate(h, &wrong));
}

TEST_CASE("exhaustive: predicates, rotations and boundary facts on small trees") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const EdgeList& edges : all_unlabeled_trees(n)) {
      const auto adj = adjacency(n, edges);
      std::vector<std::vector<std::size_t>> dist;
      for (NodeId s = 0; s < n; ++s) dist.push_back(hop_distances(adj, s));
      const auto on_path = [&](NodeId a, NodeId b, NodeId c) {
        return dist[a][b] + dist[b][c] == dist[a][c] || dist[b][a] + dist[a][c] == dist[b][c] ||
               dist[a][c] + dist[c][b] == dist[a][b];
      };
      for (const SttForest<>& f : all_two_cut_stts(n, edges)) {
        REQUIRE(validate(f, &edges));
        CHECK(underlying_edges(f) == edges);
        const SubtreeIndex<SttForest<>> index(f);
        std::vector<std::vector<NodeId>> bd(n);
        for (NodeId v = 0; v < n; ++v) bd[v] = compute_boundary(f, index, adj, v);
        for (NodeId v = 0; v < n; ++v) {
          const NodeId p = f.parent(v);
          if (p == kNone) continue;
          const NodeId g = f.parent(p);
          CHECK(f.is_separator(v) == (bd[v].size() == 2));
          const bool direct = bd[v].size() == 2 && g != kNone &&
                              std::find(bd[v].begin(), bd[v].end(), g) != bd[v].end();
          CHECK(f.is_direct_separator(v) == direct);
          // Every boundary vertex of the parent lies on a path with v and p.
          for (NodeId a : bd[p]) CHECK(on_path(v, p, a));
          // Distinct children share exactly p in their boundaries.
          for (NodeId w = v + 1; w < n; ++w) {
            if (f.parent(w) != p) continue;
            std::vector<NodeId> common;
            std::set_intersection(bd[v].begin(), bd[v].end(), bd[w].begin(), bd[w].end(),
                                  std::back_inserter(common));
            CHECK(common == std::vector<NodeId>{p});
          }
          // can_rotate agrees with validating a forced rotation.
          const SttForest<> copy = forced_rotation(f, edges, v);
          const bool valid = static_cast<bool>(validate(copy, &edges));
          CHECK(f.can_rotate(v) == valid);
          if (valid) {
            SttForest<> rotated = f;
            rotated.rotate(v);
            CHECK(validate(rotated, &edges));
            for (NodeId x = 0; x < n; ++x) {
              CHECK(rotated.parent(x) == copy.parent(x));
              CHECK(rotated.dsep_child(x) == copy.dsep_child(x));
              CHECK(rotated.isep_child(x) == copy.isep_child(x));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("tree enumeration counts") {
  // Unlabeled trees on n vertices: 1, 1, 1, 2, 3, 6, 11, 23.
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(all_unlabeled_trees(n).size() == expected[n]);
  // Search trees on a path are binary search trees: Catalan numbers.
  std::size_t count = 0;
  for_each_search_tree(5, path_edges(5), [&](const std::vector<NodeId>&) { ++count; });
  CHECK(count == 42);
}
