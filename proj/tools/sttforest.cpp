// Command-line front end: benchmark tables, MSF runs and oracle cross-checks.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "stt/collab.hpp"
#include "stt/msf.hpp"
#include "stt/runner.hpp"
#include "stt/workload.hpp"

namespace {

using namespace stt;

struct BenchArgs {
  std::string workload;
  std::string impl = "all";
  std::size_t n = 1000;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  double p_path = 0.5;
  double sigma = 0.0;
  bool evert = false;
  int repeats = 5;
  std::string out;
  std::string weights = "unit";
  bool parallel = false;
};

bench::QueryScript make_script(const BenchArgs& a) {
  if (a.workload == "urc") return bench::gen_urc(a.n, a.m ? a.m : 100 * a.n, a.p_path, a.seed);
  if (a.workload == "degenerate") return bench::gen_noisy_degenerate(a.n, a.sigma, a.seed);
  if (a.workload == "lca") return bench::gen_lca(a.n, a.m ? a.m : 10 * a.n, a.evert, a.seed);
  throw CLI::ValidationError("workload", "unknown workload '" + a.workload + "'");
}

int run_bench(const BenchArgs& a) {
  const bench::QueryScript script = make_script(a);
  const std::vector<std::string> impls = bench::resolve_impls(a.impl, script);
  const auto reports = bench::run_all(script, impls, a.repeats,
                                      bench::parse_weight_kind(a.weights), a.parallel);
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw std::runtime_error("cannot write '" + a.out + "'");
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  bench::write_tsv_header(out);
  for (const auto& r : reports) bench::write_tsv_row(out, r);
  for (const auto& r : reports) {
    if (r.checksum != reports.front().checksum) {
      std::cerr << "checksum mismatch: " << r.impl << " vs " << reports.front().impl << '\n';
      return 1;
    }
  }
  return 0;
}

struct MsfArgs {
  std::string input;
  bool random = false;
  std::size_t n = 10000;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::string impl = "all";
};

int run_msf_command(const MsfArgs& a) {
  std::size_t n;
  std::vector<msf::EdgeEvent> events;
  if (!a.input.empty()) {
    msf::CollabStream s = msf::ingest_collab_file(a.input);
    n = s.n;
    events = std::move(s.events);
  } else {
    n = a.n;
    events = msf::gen_random_events(a.n, a.m ? a.m : 8 * a.n, a.seed);
  }
  std::vector<std::string> impls;
  if (a.impl == "all")
    impls = msf::msf_impl_names();
  else
    impls = {a.impl};
  std::cout << "impl\tn\tm\tus_per_edge\ttotal_weight\n";
  std::vector<std::uint64_t> totals;
  for (const std::string& name : impls) {
    const msf::MsfReport r = msf::run_msf(name, n, events);
    std::cout << r.impl << '\t' << r.n << '\t' << r.m << '\t' << r.us_per_edge << '\t'
              << r.total_weight << '\n';
    totals.push_back(r.total_weight);
  }
  for (std::uint64_t t : totals) {
    if (t != totals.front()) {
      std::cerr << "MSF totals disagree\n";
      return 1;
    }
  }
  return 0;
}

struct VerifyArgs {
  std::size_t n = 128;
  std::size_t m = 5000;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
};

int run_verify(const VerifyArgs& a) {
  const bench::VerifyOutcome r = bench::verify(a.n, a.m, a.seed, a.seeds);
  for (const std::string& m : r.mismatches) std::cout << "MISMATCH " << m << '\n';
  std::cout << (r.mismatches.empty() ? "OK" : "FAIL") << ": " << r.mismatches.size()
            << " mismatches over " << r.scripts << " scripts\n";
  return r.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic forests on search trees on trees"};
  app.require_subcommand(1);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a workload against implementations and emit TSV");
  bench_cmd->add_option("workload", bench_args.workload, "urc | degenerate | lca")
      ->required()
      ->check(CLI::IsMember({"urc", "degenerate", "lca"}));
  bench_cmd->add_option("--impl", bench_args.impl, "Implementation name, comma list, or 'all'");
  bench_cmd->add_option("--n", bench_args.n, "Number of vertices")->check(CLI::Range(2, 1 << 30));
  bench_cmd->add_option("--m", bench_args.m, "Number of queries (default 100n for urc, 10n for lca)");
  bench_cmd->add_option("--seed", bench_args.seed, "Generator seed");
  bench_cmd->add_option("--p-path", bench_args.p_path, "PathWeight probability for urc")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--sigma", bench_args.sigma, "Noise for degenerate")->check(CLI::NonNegativeNumber);
  bench_cmd->add_flag("--evert", bench_args.evert, "Allow evert in lca");
  bench_cmd->add_option("--repeats", bench_args.repeats, "Timed repeats")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_args.out, "Write TSV to this file");
  bench_cmd->add_option("--weights", bench_args.weights, "unit | sum | max")
      ->check(CLI::IsMember({"unit", "sum", "max"}));
  bench_cmd->add_flag("--parallel", bench_args.parallel, "Run implementations on separate threads");

  MsfArgs msf_args;
  auto* msf_cmd = app.add_subcommand("msf", "Incremental minimum spanning forest");
  auto* input = msf_cmd->add_option("--input", msf_args.input, "Collaboration file")
                    ->check(CLI::ExistingFile);
  auto* random = msf_cmd->add_flag("--random", msf_args.random, "Random edge stream");
  input->excludes(random);
  msf_cmd->add_option("--n", msf_args.n, "Vertices for --random")->check(CLI::Range(2, 1 << 30));
  msf_cmd->add_option("--m", msf_args.m, "Edges for --random (default 8n)");
  msf_cmd->add_option("--seed", msf_args.seed, "Seed for --random");
  msf_cmd->add_option("--impl", msf_args.impl, "Implementation or 'all'");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all implementations against the oracles");
  verify_cmd->add_option("--n", verify_args.n, "Vertices")->check(CLI::Range(2, 1 << 20));
  verify_cmd->add_option("--m", verify_args.m, "Queries");
  verify_cmd->add_option("--seed", verify_args.seed, "First seed");
  verify_cmd->add_option("--seeds", verify_args.seeds, "Number of consecutive seeds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench_cmd) return run_bench(bench_args);
    if (*msf_cmd) {
      if (msf_args.input.empty() && !msf_args.random) {
        std::cerr << "msf: give --input <file> or --random\n";
        return 2;
      }
      return run_msf_command(msf_args);
    }
    return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
