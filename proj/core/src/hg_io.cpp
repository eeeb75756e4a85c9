#include "hgkit/hg_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "hgkit/errors.hpp"

namespace hgkit {

namespace {

std::vector<long long> parse_integers(const std::string& line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j)
      throw ParseError(lineno, "expected an integer, got '" + line.substr(i, j - i) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  int n = 0;
  int r = 0;
  std::set<VertexSet> seen;
  std::vector<VertexSet> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    auto values = parse_integers(line, lineno);
    if (!have_header) {
      if (values.size() != 2) throw ParseError(lineno, "header must be 'n r'");
      if (values[0] < 0 || values[0] > kMaxVertices)
        throw ParseError(lineno, "n must lie in [0, " + std::to_string(kMaxVertices) + "]");
      if (values[1] < 1 || values[1] > values[0])
        throw ParseError(lineno, "r must lie in [1, n]");
      n = static_cast<int>(values[0]);
      r = static_cast<int>(values[1]);
      have_header = true;
      continue;
    }
    if (values.size() != static_cast<std::size_t>(r))
      throw ParseError(lineno, "expected " + std::to_string(r) + " vertex ids, got " +
                                   std::to_string(values.size()));
    VertexSet e;
    for (long long v : values) {
      if (v < 0 || v >= n)
        throw ParseError(lineno, "vertex " + std::to_string(v) + " outside [0, " +
                                     std::to_string(n) + ")");
      if (e.contains(static_cast<int>(v)))
        throw ParseError(lineno, "vertex " + std::to_string(v) + " repeated within an edge");
      e.insert(static_cast<int>(v));
    }
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge " + e.to_string());
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(0, "missing 'n r' header");
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph read_hg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_hg(in);
}

Hypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.r() << '\n';
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](int v) {
      if (!first) out << ' ';
      out << v;
      first = false;
    });
    out << '\n';
  }
}

void write_hg_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_hg(out, h);
}

std::string format_hg(const Hypergraph& h) {
  std::ostringstream out;
  write_hg(out, h);
  return out.str();
}

}  // namespace hgkit
