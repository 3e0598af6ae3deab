#pragma once

// Collaboration files: whitespace-separated rows `author_a author_b year`,
// sorted by year. Each pair's collaboration count c maps to the edge weight
// kWMax - c, so more collaborations mean a lighter edge.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stt/msf.hpp"

namespace stt::msf {

inline constexpr std::uint64_t kWMax = std::uint64_t{1} << 32;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CollabStream {
  std::size_t n = 0;  // distinct authors
  std::vector<std::string> authors;
  std::vector<EdgeEvent> events;
};

/// Rows naming the same author twice produce no event.
CollabStream ingest_collab(std::istream& in);
CollabStream ingest_collab_file(const std::string& path);

/// Collaboration-like rows: `rows` entries over `authors` names, about a
/// third of them repeating an earlier pair, years nondecreasing.
std::string gen_synthetic_collab(std::size_t authors, std::size_t rows, std::uint64_t seed);

}  // namespace stt::msf
