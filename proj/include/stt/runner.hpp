#pragma once

// Implementation catalog and timed benchmark runs.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stt/workload.hpp"

namespace stt::bench {

enum class WeightKind { Unit, Sum, Max };

WeightKind parse_weight_kind(std::string_view name);
std::string_view to_string(WeightKind kind);

struct RunReport {
  std::string impl;
  std::string workload;
  std::size_t n = 0;
  std::size_t m = 0;
  double us_per_query = 0.0;
  std::uint64_t rotations = 0;
  std::uint64_t checksum = 0;
};

/// Registered implementation names for unrooted or rooted scripts.
std::vector<std::string> impl_names(bool rooted);

/// Expands "all" or a comma-separated list, validating every name. "all"
/// leaves out the quadratic oracles when n > 1000.
std::vector<std::string> resolve_impls(std::string_view names, const QueryScript& script);

/// Runs the script once without timing and returns (checksum, rotations).
RunReport run_once(const QueryScript& script, std::string_view impl,
                   WeightKind weights = WeightKind::Unit);

/// One discarded warm-up run, then `repeats` timed runs on fresh forests.
/// Reports the median time per query.
RunReport run(const QueryScript& script, std::string_view impl, int repeats,
              WeightKind weights = WeightKind::Unit);

std::vector<RunReport> run_all(const QueryScript& script, const std::vector<std::string>& impls,
                               int repeats, WeightKind weights, bool parallel);

struct VerifyOutcome {
  std::size_t scripts = 0;
  std::vector<std::string> mismatches;  // "<script label> <impl>"
};

/// Replays URC scripts (unit, sum and max weights) and LCA scripts (with and
/// without evert) for each seed in [seed, seed + seeds) and compares every
/// implementation's checksum with the oracle's.
VerifyOutcome verify(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t seeds = 1);

void write_tsv_header(std::ostream& out);
void write_tsv_row(std::ostream& out, const RunReport& r);

}  // namespace stt::bench
