#pragma once

// Plane embeddings shared by the unit tests and the acceptance suite. Most
// are straight-line drawings turned into rotation systems, so planarity is a
// property of the drawing rather than of hand-written neighbor orders.

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "defcol/embedding.hpp"
#include "defcol/gadgets.hpp"

namespace defcol::testing {

struct Fixture {
  std::string name;
  PlaneEmbedding emb;
};

// Incremental straight-line drawing.
class Drawing {
public:
  Vertex add(double x, double y) {
    Vertex v = static_cast<Vertex>(pos_.size());
    g_.add_vertex(v);
    pos_[v] = {x, y};
    return v;
  }
  Vertex add_polar(Vertex center, double radius, double angle) {
    auto [cx, cy] = pos_.at(center);
    return add(cx + radius * std::cos(angle), cy + radius * std::sin(angle));
  }
  void edge(Vertex a, Vertex b) { g_.add_edge(a, b); }
  [[nodiscard]] const Point& at(Vertex v) const { return pos_.at(v); }
  [[nodiscard]] const Graph& graph() const { return g_; }
  [[nodiscard]] PlaneEmbedding embed() const { return embedding_from_coordinates(g_, pos_); }

private:
  Graph g_;
  std::map<Vertex, Point> pos_;
};

inline constexpr double kPi = std::numbers::pi;

// Regular polygon; returns its vertices in order.
inline std::vector<Vertex> polygon(Drawing& d, std::size_t n, double cx, double cy, double r) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(d.add(cx + r * std::cos(2 * kPi * static_cast<double>(i) / static_cast<double>(n)),
                        cy + r * std::sin(2 * kPi * static_cast<double>(i) / static_cast<double>(n))));
  for (std::size_t i = 0; i < n; ++i)
    d.edge(out[i], out[(i + 1) % n]);
  return out;
}

inline PlaneEmbedding k1() {
  Drawing d;
  d.add(0, 0);
  return d.embed();
}

inline PlaneEmbedding k2() {
  Drawing d;
  d.edge(d.add(0, 0), d.add(1, 0));
  return d.embed();
}

inline PlaneEmbedding path(std::size_t n) {
  Drawing d;
  for (std::size_t i = 0; i < n; ++i) {
    d.add(static_cast<double>(i), 0);
    if (i)
      d.edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return d.embed();
}

inline PlaneEmbedding star(std::size_t leaves) {
  Drawing d;
  Vertex c = d.add(0, 0);
  for (std::size_t i = 0; i < leaves; ++i)
    d.edge(c, d.add_polar(c, 1, 2 * kPi * static_cast<double>(i) / static_cast<double>(leaves)));
  return d.embed();
}

inline PlaneEmbedding cycle(std::size_t n) {
  Drawing d;
  polygon(d, n, 0, 0, 1);
  return d.embed();
}

inline PlaneEmbedding k3() { return cycle(3); }

// Triangle 0-1-2 with the pendant edge 0-3.
inline PlaneEmbedding triangle_with_pendant_edge() {
  Drawing d;
  auto t = polygon(d, 3, 0, 0, 1);
  d.edge(t[0], d.add(3, 0));
  return d.embed();
}

// Two triangles sharing vertex 0.
inline PlaneEmbedding bowtie() {
  Drawing d;
  Vertex c = d.add(0, 0);
  Vertex a = d.add(1, 1), b = d.add(1, -1), x = d.add(-1, 1), y = d.add(-1, -1);
  for (auto [p, q] : std::vector<Edge>{{c, a}, {c, b}, {a, b}, {c, x}, {c, y}, {x, y}})
    d.edge(p, q);
  return d.embed();
}

// Triangle with one pendant edge at every corner.
inline PlaneEmbedding net() {
  Drawing d;
  auto t = polygon(d, 3, 0, 0, 1);
  for (Vertex v : t) {
    auto [x, y] = d.at(v);
    d.edge(v, d.add(2 * x, 2 * y));
  }
  return d.embed();
}

// K4 drawn as a triangle with a center (has 4-cycles).
inline PlaneEmbedding k4() {
  Drawing d;
  auto t = polygon(d, 3, 0, 0, 1);
  Vertex c = d.add(0, 0);
  for (Vertex v : t)
    d.edge(c, v);
  return d.embed();
}

// Brick-wall drawing of a hexagonal patch: a (width+1) x (height+1) grid
// keeping the vertical edges at columns of matching parity.
inline PlaneEmbedding hex_patch(std::size_t width, std::size_t height) {
  Drawing d;
  std::map<std::pair<std::size_t, std::size_t>, Vertex> id;
  for (std::size_t y = 0; y <= height; ++y)
    for (std::size_t x = 0; x <= width; ++x)
      id[{x, y}] = d.add(static_cast<double>(x), static_cast<double>(y));
  for (std::size_t y = 0; y <= height; ++y)
    for (std::size_t x = 0; x <= width; ++x) {
      if (x < width)
        d.edge(id[{x, y}], id[{x + 1, y}]);
      if (y < height && (x + y) % 2 == 0)
        d.edge(id[{x, y}], id[{x, y + 1}]);
    }
  return d.embed();
}

// A 9-cycle with a triangle hanging off vertex 0; the other two triangle
// corners have degree 2.
inline PlaneEmbedding triangle_on_nine_cycle() {
  Drawing d;
  auto c = polygon(d, 9, 0, 0, 2);
  Vertex a = d.add(3, 1), b = d.add(3, -1);
  d.edge(c[0], a);
  d.edge(c[0], b);
  d.edge(a, b);
  return d.embed();
}

// A 10-cycle with the chord 0-2, splitting it into a triangle and a 9-face.
inline PlaneEmbedding chorded_ten_cycle() {
  Drawing d;
  auto c = polygon(d, 10, 0, 0, 2);
  d.edge(c[0], c[2]);
  return d.embed();
}

// Around a center vertex: `good_paths` paths center-p-q (p a good 2-vertex),
// `pendant_triangles` triangles w-s-t with w adjacent to the center (w has
// degree 3), and `leaves` extra pendant vertices. The center's own
// triangle center-a-b comes first when `own_triangle` is set.
struct Hub {
  Drawing d;
  Vertex center = 0;
};

inline Hub hub(bool own_triangle, std::size_t good_paths, std::size_t pendant_triangles, std::size_t leaves = 0) {
  Hub h;
  h.center = h.d.add(0, 0);
  const std::size_t slots = (own_triangle ? 2 : 0) + good_paths + pendant_triangles + leaves;
  const double step = 2 * kPi / static_cast<double>(slots);
  std::size_t slot = 0;
  auto angle = [&] { return step * static_cast<double>(slot++); };
  if (own_triangle) {
    Vertex a = h.d.add_polar(h.center, 2, angle());
    Vertex b = h.d.add_polar(h.center, 2, angle());
    h.d.edge(h.center, a);
    h.d.edge(h.center, b);
    h.d.edge(a, b);
  }
  for (std::size_t i = 0; i < good_paths; ++i) {
    double th = angle();
    Vertex p = h.d.add_polar(h.center, 2, th);
    Vertex q = h.d.add_polar(h.center, 4, th);
    h.d.edge(h.center, p);
    h.d.edge(p, q);
  }
  for (std::size_t i = 0; i < pendant_triangles; ++i) {
    double th = angle();
    Vertex w = h.d.add_polar(h.center, 2, th);
    Vertex s = h.d.add_polar(h.center, 4, th - step / 4);
    Vertex t = h.d.add_polar(h.center, 4, th + step / 4);
    h.d.edge(h.center, w);
    h.d.edge(w, s);
    h.d.edge(w, t);
    h.d.edge(s, t);
  }
  for (std::size_t i = 0; i < leaves; ++i)
    h.d.edge(h.center, h.d.add_polar(h.center, 2, angle()));
  return h;
}

// Bad 3-face x-y-z with d(x) = 2 and d(y) = d(z) = 6: y and z each carry two
// further triangles of their own.
struct BadTriangleFixture {
  PlaneEmbedding emb;
  Vertex x, y, z;
};

inline BadTriangleFixture bad_266_triangle() {
  Drawing d;
  Vertex x = d.add(0, 2), y = d.add(-2, 0), z = d.add(2, 0);
  d.edge(x, y);
  d.edge(y, z);
  d.edge(x, z);
  // Two triangles on the far side of c, away from the other corners.
  auto ears = [&](Vertex c, double dir) {
    for (int i = 0; i < 2; ++i) {
      double th = (dir > 0 ? 0.0 : kPi) + (i == 0 ? -0.9 : 0.3) * dir;
      Vertex p = d.add_polar(c, 1.5, th);
      Vertex q = d.add_polar(c, 1.5, th + 0.5 * dir);
      d.edge(c, p);
      d.edge(c, q);
      d.edge(p, q);
    }
  };
  ears(y, -1);
  ears(z, 1);
  return {d.embed(), x, y, z};
}

// 7-vertex on one triangle with three good 2-neighbors and two pendant
// triangles: five recipients besides its own triangle.
inline Hub seven_vertex_hub() { return hub(true, 3, 2); }

// 11-vertex on one triangle with five good 2-neighbors and four pendant
// triangles: nine recipients.
inline Hub eleven_vertex_hub() { return hub(true, 5, 4); }

inline std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, PlaneEmbedding emb) { out.push_back({std::move(name), std::move(emb)}); };
  add("K1", k1());
  add("K2", k2());
  add("P4", path(4));
  add("star3", star(3));
  add("K3", k3());
  add("triangle+pendant-edge", triangle_with_pendant_edge());
  add("bowtie", bowtie());
  add("net", net());
  add("K4", k4());
  add("C6", cycle(6));
  add("C7", cycle(7));
  add("huv", *huv().embedding);
  add("hex-4x1", hex_patch(4, 1));
  add("hex-6x3", hex_patch(6, 3));
  add("triangle+9-cycle", triangle_on_nine_cycle());
  add("chorded-10-cycle", chorded_ten_cycle());
  add("bad-266-triangle", bad_266_triangle().emb);
  add("seven-vertex-hub", seven_vertex_hub().d.embed());
  add("eleven-vertex-hub", eleven_vertex_hub().d.embed());
  add("s_gadget(1)", *s_gadget(1).embedding);
  add("non_1k(1)", *non_1k(1).embedding);
  add("np_reduce(C6,2)", *np_reduce(cycle(6), 2).embedding);
  add("np_reduce(hex-4x1,3)", *np_reduce(hex_patch(4, 1), 3).embedding);
  return out;
}

} // namespace defcol::testing
