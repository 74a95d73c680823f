#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

inline constexpr const char* kEdgeListHeader = "# defcol edge-list v1";

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses the graph section from already comment-stripped lines. `extra`
// receives lines the graph grammar does not own (e.g. rotation records).
inline Graph parse_graph_lines(const std::vector<std::pair<std::size_t, std::string>>& lines,
                               std::vector<std::pair<std::size_t, std::string>>* extra) {
  Graph g;
  bool have_header = false;
  std::size_t n = 0, m = 0, edges_read = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::pair<long long, std::string>>> labels;

  for (const auto& [lineno, text] : lines) {
    std::istringstream in(text);
    std::string first;
    in >> first;
    if (first == "label") {
      long long idx;
      std::string name, trailing;
      if (!(in >> idx >> name) || (in >> trailing))
        throw FormatError(lineno, "expected 'label <index> <name>'");
      labels.push_back({lineno, {idx, name}});
      continue;
    }
    if (first == "rot") {
      if (!extra)
        throw FormatError(lineno, "rotation record in a plain edge list");
      extra->emplace_back(lineno, text);
      continue;
    }
    std::istringstream nums(text);
    long long a, b;
    std::string trailing;
    if (!(nums >> a >> b) || (nums >> trailing))
      throw FormatError(lineno, "expected two integers, got '" + text + "'");
    if (a < 0 || b < 0)
      throw FormatError(lineno, "negative value");
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    if (edges_read == m)
      throw FormatError(lineno, "more edge lines than the declared " + std::to_string(m));
    if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw FormatError(lineno, "vertex index out of range 0.." + std::to_string(n));
    if (a == b)
      throw FormatError(lineno, "self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    ++edges_read;
  }
  if (!have_header)
    throw FormatError(0, "missing 'n m' header");
  if (edges_read != m)
    throw FormatError(0, "declared " + std::to_string(m) + " edges, read " + std::to_string(edges_read));
  g = make_graph(n, edges);
  for (const auto& [lineno, entry] : labels) {
    if (entry.first < 0 || static_cast<std::size_t>(entry.first) >= n)
      throw FormatError(lineno, "label index out of range");
    try {
      g.set_label(static_cast<Vertex>(entry.first), entry.second);
    } catch (const GraphError& e) {
      throw FormatError(lineno, e.what());
    }
  }
  return g;
}

inline std::vector<std::pair<std::size_t, std::string>> significant_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto s = strip_comment(line);
    if (!s.empty())
      out.emplace_back(lineno, s);
  }
  return out;
}

} // namespace detail

// Edge-list text: `n m`, then m lines `i j` (0-based), optional
// `label i name` lines; `#` starts a comment.
inline Graph read_edge_list(std::istream& in) {
  return detail::parse_graph_lines(detail::significant_lines(in), nullptr);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

// Writes the graph with vertices renumbered 0..n-1 in identifier order.
inline void write_edge_list(std::ostream& out, const Graph& g, bool with_header = true) {
  std::map<Vertex, Vertex> index;
  Graph c = compact(g, &index);
  if (with_header)
    out << kEdgeListHeader << '\n';
  out << c.vertex_count() << ' ' << c.edge_count() << '\n';
  for (const auto& [u, v] : c.edges())
    out << u << ' ' << v << '\n';
  for (const auto& [v, name] : c.labels())
    out << "label " << v << ' ' << name << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

} // namespace defcol
