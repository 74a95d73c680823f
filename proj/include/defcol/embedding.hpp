#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defcol/graph.hpp"
#include "defcol/graph_io.hpp"

namespace defcol {

class EmbeddingError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Rotation = std::map<Vertex, std::vector<Vertex>>;
using Dart = std::pair<Vertex, Vertex>; // directed edge tail -> head

// A face is the cyclic sequence of darts met while tracing its boundary.
// A vertex appears once per corner, so cut vertices may repeat.
struct Face {
  std::vector<Dart> walk;

  [[nodiscard]] std::size_t degree() const { return walk.size(); }

  [[nodiscard]] std::vector<Vertex> corners() const {
    std::vector<Vertex> out;
    out.reserve(walk.size());
    for (const auto& d : walk)
      out.push_back(d.first);
    return out;
  }

  // True when no vertex occurs twice on the walk.
  [[nodiscard]] bool is_simple_cycle() const {
    auto c = corners();
    std::sort(c.begin(), c.end());
    return std::adjacent_find(c.begin(), c.end()) == c.end();
  }

  friend bool operator==(const Face&, const Face&) = default;
};

// Rotation system over a graph: for each vertex the clockwise order of its
// neighbors. Construction validates that every rotation lists exactly the
// neighbors of its vertex, each once.
class PlaneEmbedding {
public:
  PlaneEmbedding(Graph graph, Rotation rotation)
      : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    for (const auto& [v, order] : rotation_)
      if (!graph_.has_vertex(v))
        throw EmbeddingError("rotation given for unknown vertex " + std::to_string(v));
    for (Vertex v : graph_.vertices()) {
      auto& order = rotation_[v];
      std::vector<Vertex> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw EmbeddingError("rotation at " + std::to_string(v) + " repeats a neighbor");
      const auto& nbrs = graph_.neighbors(v);
      if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
        throw EmbeddingError("rotation at " + std::to_string(v) +
                             " does not list exactly the neighbors of the vertex");
    }
  }

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const Rotation& rotation() const { return rotation_; }
  [[nodiscard]] const std::vector<Vertex>& rotation_at(Vertex v) const { return rotation_.at(v); }

  // Neighbor following `from` in the clockwise order around `at`.
  [[nodiscard]] Vertex successor(Vertex at, Vertex from) const {
    const auto& order = rotation_.at(at);
    auto it = std::find(order.begin(), order.end(), from);
    if (it == order.end())
      throw EmbeddingError("no edge " + std::to_string(at) + "-" + std::to_string(from));
    ++it;
    return it == order.end() ? order.front() : *it;
  }

private:
  Graph graph_;
  Rotation rotation_;
};

// Face tracing: dart (u,v) is followed by (v, successor of u around v).
// Faces are listed in order of their smallest starting dart. A graph without
// edges but with a single vertex has one face of degree 0.
inline std::vector<Face> trace_faces(const PlaneEmbedding& emb) {
  const Graph& g = emb.graph();
  std::vector<Face> faces;
  if (g.edge_count() == 0) {
    if (g.vertex_count() == 1)
      faces.emplace_back();
    return faces;
  }
  std::set<Dart> used;
  std::vector<Dart> darts;
  for (const auto& [u, v] : g.edges()) {
    darts.emplace_back(u, v);
    darts.emplace_back(v, u);
  }
  std::sort(darts.begin(), darts.end());
  for (const Dart& start : darts) {
    if (used.count(start))
      continue;
    Face f;
    Dart d = start;
    do {
      used.insert(d);
      f.walk.push_back(d);
      d = Dart{d.second, emb.successor(d.second, d.first)};
    } while (d != start);
    faces.push_back(std::move(f));
  }
  return faces;
}

// Euler characteristic test V - E + F = 2 on the traced faces.
inline bool check_planarity_certificate(const PlaneEmbedding& emb) {
  const Graph& g = emb.graph();
  if (g.vertex_count() == 0 || !is_connected(g))
    throw EmbeddingError("planarity certificate requires a connected, non-empty graph");
  auto v = static_cast<long long>(g.vertex_count());
  auto e = static_cast<long long>(g.edge_count());
  auto f = static_cast<long long>(trace_faces(emb).size());
  return v - e + f == 2;
}

using Point = std::pair<double, double>;

// Rotation read off a straight-line drawing: neighbors sorted clockwise by
// angle. Only a planar drawing yields a genus-0 rotation; callers verify with
// check_planarity_certificate.
inline PlaneEmbedding embedding_from_coordinates(const Graph& g, const std::map<Vertex, Point>& pos) {
  Rotation rot;
  for (Vertex v : g.vertices()) {
    auto pv = pos.find(v);
    if (pv == pos.end())
      throw EmbeddingError("no coordinates for vertex " + std::to_string(v));
    std::vector<std::pair<double, Vertex>> keyed;
    for (Vertex w : g.neighbors(v)) {
      auto pw = pos.find(w);
      if (pw == pos.end())
        throw EmbeddingError("no coordinates for vertex " + std::to_string(w));
      double angle = std::atan2(pw->second.second - pv->second.second,
                                pw->second.first - pv->second.first);
      keyed.emplace_back(-angle, w);
    }
    std::sort(keyed.begin(), keyed.end());
    auto& order = rot[v];
    for (const auto& kv : keyed)
      order.push_back(kv.second);
  }
  return PlaneEmbedding(g, std::move(rot));
}

inline constexpr const char* kEmbeddingHeader = "# defcol embedding v1";

// Graph section in edge-list format followed by `rot i: j k l ...` records.
inline void write_embedding(std::ostream& out, const PlaneEmbedding& emb) {
  std::map<Vertex, Vertex> index;
  compact(emb.graph(), &index);
  out << kEmbeddingHeader << '\n';
  write_edge_list(out, emb.graph(), false);
  for (const auto& [v, order] : emb.rotation()) {
    out << "rot " << index.at(v) << ':';
    for (Vertex w : order)
      out << ' ' << index.at(w);
    out << '\n';
  }
}

inline std::string to_embedding_text(const PlaneEmbedding& emb) {
  std::ostringstream out;
  write_embedding(out, emb);
  return out.str();
}

inline PlaneEmbedding read_embedding(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> rot_lines;
  Graph g = detail::parse_graph_lines(detail::significant_lines(in), &rot_lines);
  Rotation rot;
  for (const auto& [lineno, text] : rot_lines) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw FormatError(lineno, "expected 'rot i: j k ...'");
    std::istringstream head(text.substr(3, colon - 3));
    long long v;
    std::string trailing;
    if (!(head >> v) || (head >> trailing) || v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
      throw FormatError(lineno, "bad rotation vertex");
    if (rot.count(static_cast<Vertex>(v)))
      throw FormatError(lineno, "duplicate rotation record");
    auto& order = rot[static_cast<Vertex>(v)];
    std::istringstream body(text.substr(colon + 1));
    std::string tok;
    while (body >> tok) {
      try {
        std::size_t used = 0;
        long long w = std::stoll(tok, &used);
        if (used != tok.size() || w < 0)
          throw std::invalid_argument(tok);
        order.push_back(static_cast<Vertex>(w));
      } catch (const std::exception&) {
        throw FormatError(lineno, "bad neighbor '" + tok + "'");
      }
    }
  }
  try {
    return PlaneEmbedding(std::move(g), std::move(rot));
  } catch (const EmbeddingError& e) {
    throw FormatError(0, e.what());
  }
}

inline PlaneEmbedding parse_embedding(const std::string& text) {
  std::istringstream in(text);
  return read_embedding(in);
}

} // namespace defcol
