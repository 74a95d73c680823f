#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defcol/embedding.hpp"
#include "defcol/graph.hpp"

namespace defcol {

struct GadgetResult {
  Graph graph;
  std::map<std::string, Vertex> terminals;
  std::optional<PlaneEmbedding> embedding;

  [[nodiscard]] Vertex terminal(const std::string& name) const {
    auto it = terminals.find(name);
    if (it == terminals.end())
      throw GraphError("gadget has no terminal '" + name + "'");
    return it->second;
  }
};

namespace detail {

// Local numbering of the two-triangle gadget: triangles u-a-b and v-c-d joined
// by the edge b-d.
enum HuvVertex : Vertex { kU = 0, kA = 1, kB = 2, kC = 3, kD = 4, kV = 5 };

inline Graph huv_skeleton() {
  return make_graph(6, {{kU, kA}, {kU, kB}, {kA, kB}, {kB, kD}, {kC, kD}, {kC, kV}, {kD, kV}});
}

// Positions of a, b, c, d for a copy drawn along the segment from -> to,
// shifted sideways by `offset` and `width` wide.
inline std::vector<Point> huv_inner_positions(Point from, Point to, double offset, double width) {
  double dx = to.first - from.first, dy = to.second - from.second;
  double len = std::hypot(dx, dy);
  Point dir{dx / len, dy / len};
  Point perp{-dir.second, dir.first};
  auto at = [&](double t, double side) {
    return Point{from.first + t * dx + side * perp.first, from.second + t * dy + side * perp.second};
  };
  return {at(0.25, offset + width), at(0.25, offset - width), at(0.75, offset + width), at(0.75, offset - width)};
}

struct Drawing {
  Graph graph;
  std::map<Vertex, Point> pos;
};

// Glues a fresh gadget copy between existing vertices `left` and `right`.
inline void attach_huv(Drawing& d, Vertex left, Vertex right, double offset, double width) {
  auto [g, off] = disjoint_union(d.graph, huv_skeleton());
  auto inner = huv_inner_positions(d.pos.at(left), d.pos.at(right), offset, width);
  d.pos[off + kA] = inner[0];
  d.pos[off + kB] = inner[1];
  d.pos[off + kC] = inner[2];
  d.pos[off + kD] = inner[3];
  g = identify(g, left, off + kU);
  g = identify(g, right, off + kV);
  d.graph = std::move(g);
}

inline Drawing compacted(const Drawing& d) {
  std::map<Vertex, Vertex> index;
  Drawing out{compact(d.graph, &index), {}};
  for (const auto& [old_id, new_id] : index)
    out.pos[new_id] = d.pos.at(old_id);
  return out;
}

// S_z drawn with z at `origin` and the path x1 x2 x3 below it.
inline Drawing s_drawing(int k, Point origin) {
  Drawing d;
  const auto [ox, oy] = origin;
  for (Vertex v = 0; v < 4; ++v)
    d.graph.add_vertex(v);
  d.graph.add_edge(1, 2);
  d.graph.add_edge(2, 3);
  d.pos[0] = {ox, oy};
  d.pos[1] = {ox - 6.0, oy - 10.0};
  d.pos[2] = {ox, oy - 10.0};
  d.pos[3] = {ox + 6.0, oy - 10.0};
  const int copies = 2 * k + 1;
  const double spacing = 1.0 / copies;
  for (Vertex x = 1; x <= 3; ++x)
    for (int i = 0; i < copies; ++i)
      attach_huv(d, 0, x, (i - k) * spacing, 0.3 * spacing);
  return compacted(d);
}

} // namespace detail

// Two triangles u-a-b and v-c-d joined by b-d. Under a (1,k) spec with u and v
// colored 2, the inner vertices a, b, c, d cannot all take color 1.
inline GadgetResult huv() {
  using namespace detail;
  GadgetResult r{huv_skeleton(), {}, std::nullopt};
  const std::pair<const char*, Vertex> names[] = {{"u", kU}, {"a", kA}, {"b", kB}, {"c", kC}, {"d", kD}, {"v", kV}};
  for (const auto& [name, v] : names) {
    r.graph.set_label(v, name);
    r.terminals[name] = v;
  }
  std::map<Vertex, Point> pos{{kU, {0, 0}}, {kA, {1, 1}}, {kB, {1, -1}}, {kC, {2, 1}}, {kD, {2, -1}}, {kV, {3, 0}}};
  r.embedding = embedding_from_coordinates(r.graph, pos);
  return r;
}

// Vertex z, path x1-x2-x3, and 2k+1 gadget copies from z to each x_j (copies
// generated j-major, i-minor). z = 0, x_j = j, copy (j, i) owns vertices
// 4 + 4*((j-1)*(2k+1) + i) + {a, b, c, d}.
inline GadgetResult s_gadget(int k) {
  if (k < 1)
    throw GraphError("s_gadget requires k >= 1");
  auto d = detail::s_drawing(k, {0.0, 0.0});
  GadgetResult r{std::move(d.graph), {{"z", 0}, {"x1", 1}, {"x2", 2}, {"x3", 3}}, std::nullopt};
  for (const auto& [name, v] : r.terminals)
    r.graph.set_label(v, name);
  r.embedding = embedding_from_coordinates(r.graph, d.pos);
  return r;
}

// Three copies of S_z with their z vertices joined into the path z1-z2-z3.
// Not (1,k)-colorable.
inline GadgetResult non_1k(int k) {
  if (k < 1)
    throw GraphError("non_1k requires k >= 1");
  detail::Drawing all;
  std::vector<Vertex> zs;
  for (int m = 0; m < 3; ++m) {
    auto part = detail::s_drawing(k, {20.0 * m, 0.0});
    auto [g, off] = disjoint_union(all.graph, part.graph);
    for (const auto& [v, p] : part.pos)
      all.pos[v + off] = p;
    all.graph = std::move(g);
    zs.push_back(off);
  }
  all.graph.add_edge(zs[0], zs[1]);
  all.graph.add_edge(zs[1], zs[2]);
  GadgetResult r{std::move(all.graph), {{"z1", zs[0]}, {"z2", zs[1]}, {"z3", zs[2]}}, std::nullopt};
  for (const auto& [name, v] : r.terminals)
    r.graph.set_label(v, name);
  r.embedding = embedding_from_coordinates(r.graph, all.pos);
  return r;
}

namespace detail {

// New vertex ids for the triangles hung at each vertex: for vertices in
// ascending order and i = 1..k-1, the pair (v'_i, v''_i).
inline std::vector<std::pair<Vertex, std::pair<Vertex, Vertex>>> triangle_slots(const Graph& g, int k) {
  std::vector<std::pair<Vertex, std::pair<Vertex, Vertex>>> out;
  Vertex next = g.next_free_id();
  for (Vertex v : g.vertices())
    for (int i = 1; i < k; ++i) {
      out.push_back({v, {next, next + 1}});
      next += 2;
    }
  return out;
}

} // namespace detail

// Hangs k-1 triangles on every vertex. g is (0,1)-colorable iff the result is
// (0,k)-colorable; girth(g) >= 6 makes the result free of 4- and 5-cycles.
inline GadgetResult np_reduce(const Graph& g, int k) {
  if (k < 1)
    throw GraphError("np_reduce requires k >= 1");
  GadgetResult r{g, {}, std::nullopt};
  for (const auto& [v, pair] : detail::triangle_slots(g, k)) {
    r.graph.add_vertex(pair.first);
    r.graph.add_vertex(pair.second);
    r.graph.add_edge(v, pair.first);
    r.graph.add_edge(v, pair.second);
    r.graph.add_edge(pair.first, pair.second);
  }
  for (const auto& [v, name] : g.labels())
    r.terminals[name] = v;
  return r;
}

// Same construction, with each triangle placed in the corner of v that
// follows its last original neighbor.
inline GadgetResult np_reduce(const PlaneEmbedding& emb, int k) {
  GadgetResult r = np_reduce(emb.graph(), k);
  Rotation rot = emb.rotation();
  for (const auto& [v, pair] : detail::triangle_slots(emb.graph(), k)) {
    rot[v].push_back(pair.first);
    rot[v].push_back(pair.second);
    rot[pair.first] = {v, pair.second};
    rot[pair.second] = {pair.first, v};
  }
  r.embedding = PlaneEmbedding(r.graph, std::move(rot));
  return r;
}

} // namespace defcol
