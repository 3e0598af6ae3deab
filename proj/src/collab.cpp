#include "stt/collab.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "stt/random.hpp"

namespace stt::msf {

CollabStream ingest_collab(std::istream& in) {
  CollabStream out;
  std::unordered_map<std::string, NodeId> ids;
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  const auto id_of = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<NodeId>(out.authors.size()));
    if (fresh) out.authors.push_back(name);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  long long last_year = 0;
  bool have_year = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string a, b, year_text, extra;
    if (!(row >> a)) continue;  // blank line
    if (!(row >> b >> year_text) || (row >> extra))
      throw ParseError(line_no, "expected `author_a author_b year`");
    long long year = 0;
    const char* end = year_text.data() + year_text.size();
    const auto [ptr, ec] = std::from_chars(year_text.data(), end, year);
    if (ec != std::errc{} || ptr != end) throw ParseError(line_no, "invalid year '" + year_text + "'");
    if (have_year && year < last_year) throw ParseError(line_no, "rows are not sorted by year");
    last_year = year;
    have_year = true;

    const NodeId u = id_of(a), v = id_of(b);
    if (u == v) continue;
    const Edge e = make_edge(u, v);
    const std::uint64_t c = ++counts[(std::uint64_t{e.first} << 32) | e.second];
    expect(c < kWMax, "ingest_collab: collaboration count overflow");
    out.events.push_back(
        {u, v, kWMax - c, c == 1 ? EventKind::Insert : EventKind::Decrease});
  }
  out.n = out.authors.size();
  return out;
}

CollabStream ingest_collab_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ingest_collab(in);
}

std::string gen_synthetic_collab(std::size_t authors, std::size_t rows, std::uint64_t seed) {
  expect(authors >= 2, "gen_synthetic_collab: need at least two authors");
  Rng rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::ostringstream out;
  int year = 1990;
  for (std::size_t i = 0; i < rows; ++i) {
    if (rng.bernoulli(0.02)) ++year;
    std::uint64_t a, b;
    if (!seen.empty() && rng.bernoulli(1.0 / 3.0)) {
      std::tie(a, b) = seen[rng.below(seen.size())];
    } else {
      a = rng.below(authors);
      b = rng.below(authors - 1);
      if (b >= a) ++b;
      seen.emplace_back(a, b);
    }
    out << 'a' << a << ' ' << 'a' << b << ' ' << year << '\n';
  }
  return out.str();
}

}  // namespace stt::msf
