#include <doctest.h>

#include <set>
#include <sstream>

#include "stt/oracle.hpp"
#include "stt/replay.hpp"
#include "stt/runner.hpp"
#include "stt/workload.hpp"

using namespace stt;
using namespace stt::bench;

TEST_CASE("urc scripts") {
  const auto one = gen_urc(2, 1, 0.5, 7);
  REQUIRE(one.ops.size() == 1);
  CHECK(one.ops[0].kind == OpKind::Link);
  CHECK(make_edge(one.ops[0].u, one.ops[0].v) == make_edge(0, 1));
  CHECK(one.ops[0].w >= 1);
  CHECK(one.ops[0].w <= kMaxLinkWeight);

  const auto a = gen_urc(100, 5000, 0.5, 3);
  CHECK(a.ops == gen_urc(100, 5000, 0.5, 3).ops);
  CHECK(a.ops != gen_urc(100, 5000, 0.5, 4).ops);
  CHECK(a.workload == "urc");
  CHECK_FALSE(a.rooted());
  // Every link joins two trees and every cut removes an existing edge.
  NaiveForest<SumWeight> f(100);
  CHECK_NOTHROW(replay_unrooted(f, a));

  // No path queries at all, and only path queries once connected.
  for (const Op& op : gen_urc(50, 2000, 0.0, 1).ops) CHECK(op.kind != OpKind::PathWeight);
  for (const Op& op : gen_urc(50, 2000, 1.0, 1).ops) CHECK(op.kind != OpKind::Cut);

  CHECK_THROWS_AS(gen_urc(1, 5, 0.5, 0), PreconditionError);
  CHECK_THROWS_AS(gen_urc(5, 5, 1.5, 0), PreconditionError);
}

TEST_CASE("degenerate scripts") {
  const auto s = gen_degenerate(4);
  CHECK(s.workload == "degenerate");
  const std::vector<Op> expected = {
      {OpKind::Link, 0, 1},       {OpKind::Link, 1, 2},       {OpKind::Link, 2, 3},
      {OpKind::PathWeight, 0, 3}, {OpKind::PathWeight, 1, 3}, {OpKind::PathWeight, 2, 3},
      {OpKind::PathWeight, 3, 3},
  };
  CHECK(s.ops == expected);

  const auto noisy = gen_noisy_degenerate(500, 20.0, 2);
  CHECK(noisy.workload == "noisy-degenerate");
  CHECK(noisy.ops == gen_noisy_degenerate(500, 20.0, 2).ops);
  CHECK(noisy.ops.size() == 999);
  std::set<NodeId> starts;
  for (std::size_t i = 499; i < noisy.ops.size(); ++i) {
    CHECK(noisy.ops[i].u < 500);
    CHECK(noisy.ops[i].v == 499);
    starts.insert(noisy.ops[i].u);
  }
  CHECK(starts.size() > 100);
  CHECK(starts.size() < 500);
}

TEST_CASE("lca scripts") {
  for (bool evert : {false, true}) {
    const auto s = gen_lca(200, 2000, evert, 5);
    CHECK(s.rooted());
    CHECK(s.uses_evert() == evert);
    CHECK(s.workload == (evert ? "lca-evert" : "lca"));
    CHECK(s.ops == gen_lca(200, 2000, evert, 5).ops);
    SimpleRooted f(200);
    CHECK_NOTHROW(replay_rooted(f, s));
  }
  const auto mix = op_mix(gen_lca(2000, 20000, false, 1));
  CHECK(mix.size() == 8);
  CHECK(mix[static_cast<int>(OpKind::RootedLink)] + mix[static_cast<int>(OpKind::RootedCut)] +
            mix[static_cast<int>(OpKind::Lca)] ==
        doctest::Approx(100.0));
}

TEST_CASE("checksum") {
  Checksum a, b, c;
  a.add(1);
  a.add(2);
  b.add(2);
  b.add(1);
  c.add(1);
  c.add(2);
  CHECK(a.value != b.value);
  CHECK(a.value == c.value);
  CHECK(Checksum{}.value == 0xcbf29ce484222325ULL);
  CHECK(encode<SumWeight>(std::nullopt) == kAbsent);
  CHECK(encode<SumWeight>(std::uint64_t{7}) == 7);
  CHECK(encode<MaxEdge>(MaxEdgeValue{9, 3}) == 9);
  CHECK(encode<UnitWeight>(Unit{}) == 1);
  CHECK(encode_node(std::nullopt) == kAbsent);
}

TEST_CASE("all implementations agree on checksums") {
  const auto urc = gen_urc(80, 4000, 0.5, 11);
  for (WeightKind w : {WeightKind::Unit, WeightKind::Sum, WeightKind::Max}) {
    const auto expected = run_once(urc, "naive", w).checksum;
    for (const auto& impl : impl_names(false))
      CHECK_MESSAGE(run_once(urc, impl, w).checksum == expected, impl, " ", to_string(w));
  }
  const auto deg = gen_noisy_degenerate(300, 5.0, 1);
  const auto deg_expected = run_once(deg, "naive", WeightKind::Sum).checksum;
  for (const auto& impl : impl_names(false))
    CHECK_MESSAGE(run_once(deg, impl, WeightKind::Sum).checksum == deg_expected, impl);
  for (bool evert : {false, true}) {
    const auto lca = gen_lca(80, 800, evert, 12);
    const auto expected = run_once(lca, "simple").checksum;
    for (const auto& impl : impl_names(true))
      CHECK_MESSAGE(run_once(lca, impl).checksum == expected, impl);
  }
}

TEST_CASE("runner") {
  const auto urc = gen_urc(50, 500, 0.5, 1);
  const auto lca = gen_lca(50, 500, false, 1);
  CHECK_THROWS_AS(run_once(urc, "nope"), std::invalid_argument);
  CHECK_THROWS_AS(run_once(urc, "simple"), std::invalid_argument);
  CHECK_THROWS_AS(run_once(lca, "1-cut"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_impls("link-cut,nope", urc), std::invalid_argument);
  CHECK(resolve_impls("link-cut,mtr", urc) == std::vector<std::string>{"link-cut", "mtr"});
  CHECK(resolve_impls("all", urc) == impl_names(false));
  const auto big = gen_urc(2000, 10, 0.5, 1);
  const auto all_big = resolve_impls("all", big);
  CHECK(all_big.size() + 1 == impl_names(false).size());
  CHECK(std::find(all_big.begin(), all_big.end(), "naive") == all_big.end());
  CHECK(parse_weight_kind("max") == WeightKind::Max);
  CHECK_THROWS_AS(parse_weight_kind("min"), std::invalid_argument);

  const auto r = run(urc, "greedy-splay", 3);
  CHECK(r.impl == "greedy-splay");
  CHECK(r.workload == "urc");
  CHECK(r.n == 50);
  CHECK(r.m == 500);
  CHECK(r.us_per_query >= 0.0);
  CHECK(r.rotations > 0);
  CHECK(r.checksum == run_once(urc, "naive").checksum);

  const auto reports = run_all(urc, {"link-cut", "mtr", "1-cut"}, 1, WeightKind::Unit, true);
  REQUIRE(reports.size() == 3);
  CHECK(reports[1].impl == "mtr");
  CHECK(reports[2].checksum == r.checksum);

  std::ostringstream out;
  write_tsv_header(out);
  write_tsv_row(out, RunReport{"x", "urc", 5, 6, 1.5, 7, 255});
  CHECK(out.str() == "impl\tworkload\tn\tm\tus_per_query\trotations\tchecksum\nx\turc\t5\t6\t1.5\t7\tff\n");
}
