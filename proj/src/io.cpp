#include "spg/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "spg/errors.hpp"

namespace spg {

namespace {

std::vector<long long> read_integers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i)
      throw ParseError(line_no, "expected an integer in '" + std::string(line) + "'");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      throw ParseError(line_no, "unexpected character in '" + std::string(line) + "'");
    out.push_back(value);
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  Multigraph g;
  long long expected_edges = -1;
  long long seen_edges = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (skippable(line)) {
      if (end == text.size()) break;
      continue;
    }
    const auto values = read_integers(line, line_no);
    if (values.size() != 2) throw ParseError(line_no, "expected two integers");
    if (expected_edges < 0) {
      if (values[0] < 0 || values[1] < 0 || values[0] > 10'000'000)
        throw ParseError(line_no, "malformed header: vertex and edge counts must be non-negative");
      g = Multigraph(static_cast<int>(values[0]));
      expected_edges = values[1];
    } else {
      if (seen_edges == expected_edges) throw ParseError(line_no, "more edge lines than declared");
      const long long u = values[0], v = values[1];
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u) + "-" + std::to_string(v));
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++seen_edges;
    }
    if (end == text.size()) break;
  }
  if (expected_edges < 0) throw ParseError(line_no, "missing header line 'n m'");
  if (seen_edges != expected_edges)
    throw ParseError(line_no, "expected " + std::to_string(expected_edges) + " edges, found " + std::to_string(seen_edges));
  return g;
}

std::string serialize_graph(const Multigraph& g, const std::vector<std::string>& comments) {
  std::vector<std::pair<Vertex, Vertex>> sorted;
  sorted.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) sorted.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : sorted) out << u << ' ' << v << '\n';
  return out.str();
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Multigraph& g, const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize_graph(g, comments);
}

}  // namespace spg
