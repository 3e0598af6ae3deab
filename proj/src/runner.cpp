#include "stt/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stt/dynamic_forest.hpp"
#include "stt/heuristics.hpp"
#include "stt/link_cut.hpp"
#include "stt/one_cut.hpp"
#include "stt/oracle.hpp"
#include "stt/replay.hpp"
#include "stt/rooted_forest.hpp"

namespace stt::bench {

namespace {

struct Outcome {
  std::uint64_t checksum;
  std::uint64_t rotations;
  double seconds;
};

using Runner = std::function<Outcome(const QueryScript&)>;

struct Entry {
  std::string_view name;
  Runner run;
};

template <class F, bool Rooted>
Runner make_runner() {
  return [](const QueryScript& s) {
    F f(s.n);
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t sum;
    if constexpr (Rooted)
      sum = replay_rooted(f, s);
    else
      sum = replay_unrooted(f, s);
    const auto t1 = std::chrono::steady_clock::now();
    return Outcome{sum, f.rotations(), std::chrono::duration<double>(t1 - t0).count()};
  };
}

template <MonoidWeight M>
std::vector<Entry> unrooted_catalog() {
  return {
      {"link-cut", make_runner<LinkCutForest<M, true>, false>()},
      {"greedy-splay", make_runner<NonStableForest<GreedySplayTT, M>, false>()},
      {"stable-greedy-splay", make_runner<StableForest<GreedySplayTT, M>, false>()},
      {"2p-splay", make_runner<NonStableForest<TwoPassSplayTT, M>, false>()},
      {"stable-2p-splay", make_runner<StableForest<TwoPassSplayTT, M>, false>()},
      {"l2p-splay", make_runner<NonStableForest<LocalTwoPassSplayTT, M>, false>()},
      {"stable-l2p-splay", make_runner<StableForest<LocalTwoPassSplayTT, M>, false>()},
      {"mtr", make_runner<NonStableForest<MoveToRootTT, M>, false>()},
      {"stable-mtr", make_runner<StableForest<MoveToRootTT, M>, false>()},
      {"1-cut", make_runner<OneCutForest<M>, false>()},
      {"naive", make_runner<NaiveForest<M>, false>()},
  };
}

std::vector<Entry> rooted_catalog(bool evert) {
  return {
      {"link-cut", evert ? make_runner<LinkCutForest<UnitWeight, true>, true>()
                         : make_runner<LinkCutForest<UnitWeight, false>, true>()},
      {"greedy-splay", make_runner<RootedSttForest<GreedySplayTT>, true>()},
      {"2p-splay", make_runner<RootedSttForest<TwoPassSplayTT>, true>()},
      {"l2p-splay", make_runner<RootedSttForest<LocalTwoPassSplayTT>, true>()},
      {"mtr", make_runner<RootedSttForest<MoveToRootTT>, true>()},
      {"simple", make_runner<SimpleRooted, true>()},
  };
}

std::vector<Entry> catalog_for(const QueryScript& s, WeightKind weights) {
  if (s.rooted()) return rooted_catalog(s.uses_evert());
  switch (weights) {
    case WeightKind::Sum:
      return unrooted_catalog<SumWeight>();
    case WeightKind::Max:
      return unrooted_catalog<MaxEdge>();
    case WeightKind::Unit:
      break;
  }
  return unrooted_catalog<UnitWeight>();
}

Runner find_runner(const QueryScript& s, std::string_view impl, WeightKind weights) {
  for (Entry& e : catalog_for(s, weights))
    if (e.name == impl) return std::move(e.run);
  throw std::invalid_argument("unknown implementation '" + std::string(impl) + "' for " +
                              (s.rooted() ? "rooted" : "unrooted") + " scripts");
}

bool is_oracle(std::string_view name) { return name == "naive" || name == "simple"; }

}  // namespace

WeightKind parse_weight_kind(std::string_view name) {
  if (name == "unit") return WeightKind::Unit;
  if (name == "sum") return WeightKind::Sum;
  if (name == "max") return WeightKind::Max;
  throw std::invalid_argument("unknown weight kind '" + std::string(name) + "'");
}

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Sum:
      return "sum";
    case WeightKind::Max:
      return "max";
    case WeightKind::Unit:
      break;
  }
  return "unit";
}

std::vector<std::string> impl_names(bool rooted) {
  std::vector<std::string> out;
  for (const Entry& e : rooted ? rooted_catalog(false) : unrooted_catalog<UnitWeight>())
    out.emplace_back(e.name);
  return out;
}

std::vector<std::string> resolve_impls(std::string_view names, const QueryScript& script) {
  const std::vector<std::string> known = impl_names(script.rooted());
  std::vector<std::string> out;
  if (names == "all") {
    for (const std::string& name : known)
      if (script.n <= 1000 || !is_oracle(name)) out.push_back(name);
    return out;
  }
  std::stringstream in{std::string(names)};
  for (std::string name; std::getline(in, name, ',');) {
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::invalid_argument("unknown implementation '" + name + "' for " +
                                  (script.rooted() ? "rooted" : "unrooted") + " scripts");
    out.push_back(name);
  }
  return out;
}

RunReport run_once(const QueryScript& script, std::string_view impl, WeightKind weights) {
  const Outcome o = find_runner(script, impl, weights)(script);
  return RunReport{std::string(impl), script.workload, script.n, script.ops.size(),
                   o.seconds * 1e6 / static_cast<double>(std::max<std::size_t>(1, script.ops.size())),
                   o.rotations, o.checksum};
}

RunReport run(const QueryScript& script, std::string_view impl, int repeats, WeightKind weights) {
  expect(repeats >= 1, "run: repeats must be positive");
  const Runner runner = find_runner(script, impl, weights);
  const Outcome warm = runner(script);
  std::vector<double> times;
  for (int i = 0; i < repeats; ++i) {
    const Outcome o = runner(script);
    if (o.checksum != warm.checksum)
      throw std::runtime_error("run: nondeterministic checksum for " + std::string(impl));
    times.push_back(o.seconds);
  }
  std::sort(times.begin(), times.end());
  const std::size_t k = times.size();
  const double median = k % 2 ? times[k / 2] : 0.5 * (times[k / 2 - 1] + times[k / 2]);
  const double q = static_cast<double>(std::max<std::size_t>(1, script.ops.size()));
  return RunReport{std::string(impl), script.workload, script.n, script.ops.size(),
                   median * 1e6 / q, warm.rotations, warm.checksum};
}

std::vector<RunReport> run_all(const QueryScript& script, const std::vector<std::string>& impls,
                               int repeats, WeightKind weights, bool parallel) {
  std::vector<RunReport> out;
  if (!parallel) {
    for (const std::string& name : impls) out.push_back(run(script, name, repeats, weights));
    return out;
  }
  std::vector<std::future<RunReport>> jobs;
  for (const std::string& name : impls)
    jobs.push_back(std::async(std::launch::async,
                              [&script, name, repeats, weights] {
                                return run(script, name, repeats, weights);
                              }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

namespace {

void verify_script(const QueryScript& s, const std::string& oracle, WeightKind weights,
                   const std::string& label, VerifyOutcome& out) {
  ++out.scripts;
  const std::uint64_t truth = run_once(s, oracle, weights).checksum;
  for (const std::string& impl : impl_names(s.rooted()))
    if (impl != oracle && run_once(s, impl, weights).checksum != truth)
      out.mismatches.push_back(label + ' ' + impl);
}

}  // namespace

VerifyOutcome verify(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t seeds) {
  VerifyOutcome out;
  for (std::uint64_t s = seed; s < seed + seeds; ++s) {
    const QueryScript urc = gen_urc(n, m, 0.5, s);
    for (const WeightKind kind : {WeightKind::Unit, WeightKind::Sum, WeightKind::Max})
      verify_script(urc, "naive", kind,
                    "urc/" + std::string(to_string(kind)) + "/seed=" + std::to_string(s), out);
    for (const bool evert : {false, true}) {
      const QueryScript lca = gen_lca(n, m, evert, s);
      verify_script(lca, "simple", WeightKind::Unit, lca.workload + "/seed=" + std::to_string(s),
                    out);
    }
  }
  return out;
}

void write_tsv_header(std::ostream& out) {
  out << "impl\tworkload\tn\tm\tus_per_query\trotations\tchecksum\n";
}

void write_tsv_row(std::ostream& out, const RunReport& r) {
  out << r.impl << '\t' << r.workload << '\t' << r.n << '\t' << r.m << '\t' << r.us_per_query
      << '\t' << r.rotations << '\t' << std::hex << r.checksum << std::dec << '\n';
}

}  // namespace stt::bench
