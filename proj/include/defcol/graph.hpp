#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace defcol {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Cycle = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph over opaque, stable vertex identifiers.
// Iteration order is always ascending by identifier.
class Graph {
public:
  Graph() = default;

  void add_vertex(Vertex v) { adj_.try_emplace(v); }

  void add_edge(Vertex u, Vertex v) {
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u));
    require(u);
    require(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    require(u);
    require(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  // Labels name terminal vertices; a name may be attached to one vertex only.
  void set_label(Vertex v, const std::string& name) {
    require(v);
    for (const auto& [w, existing] : labels_)
      if (existing == name && w != v)
        throw GraphError("duplicate label '" + name + "'");
    labels_[v] = name;
  }

  [[nodiscard]] bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
  }

  [[nodiscard]] const std::set<Vertex>& neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
      throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
  }

  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }

  [[nodiscard]] std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, nbrs] : adj_)
      twice += nbrs.size();
    return twice / 2;
  }

  [[nodiscard]] std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(adj_.size());
    for (const auto& entry : adj_)
      out.push_back(entry.first);
    return out;
  }

  // Each edge once, as (smaller, larger), in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [v, nbrs] : adj_)
      for (Vertex w : nbrs)
        if (v < w)
          out.emplace_back(v, w);
    return out;
  }

  [[nodiscard]] const std::map<Vertex, std::string>& labels() const { return labels_; }

  [[nodiscard]] std::optional<std::string> label_of(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end())
      return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::optional<Vertex> find_label(const std::string& name) const {
    for (const auto& [v, label] : labels_)
      if (label == name)
        return v;
    return std::nullopt;
  }

  // Smallest identifier strictly above every vertex in use.
  [[nodiscard]] Vertex next_free_id() const {
    return adj_.empty() ? 0 : adj_.rbegin()->first + 1;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void require(Vertex v) const {
    if (!has_vertex(v))
      throw GraphError("unknown vertex " + std::to_string(v));
  }

  std::map<Vertex, std::set<Vertex>> adj_;
  std::map<Vertex, std::string> labels_;

  friend Graph identify(const Graph&, Vertex, Vertex);
  friend Graph delete_vertex(const Graph&, Vertex);
};

// Vertices 0..n-1 with the given edges; repeated pairs collapse.
inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i)
    g.add_vertex(static_cast<Vertex>(i));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(n));
    g.add_edge(u, v);
  }
  return g;
}

// Merges v into u. The merged vertex keeps u's identifier and label (v's label
// is carried over only if u had none). Loops and parallels are dropped.
inline Graph identify(const Graph& g, Vertex u, Vertex v) {
  if (u == v)
    throw GraphError("cannot identify a vertex with itself");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw GraphError("identify: unknown vertex");
  Graph out = g;
  for (Vertex w : g.neighbors(v)) {
    out.adj_[w].erase(v);
    if (w != u) {
      out.adj_[u].insert(w);
      out.adj_[w].insert(u);
    }
  }
  out.adj_[u].erase(v);
  out.adj_.erase(v);
  if (auto it = out.labels_.find(v); it != out.labels_.end()) {
    if (!out.labels_.count(u))
      out.labels_[u] = it->second;
    out.labels_.erase(v);
  }
  return out;
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v))
    throw GraphError("delete_vertex: unknown vertex " + std::to_string(v));
  Graph out = g;
  for (Vertex w : g.neighbors(v))
    out.adj_[w].erase(v);
  out.adj_.erase(v);
  out.labels_.erase(v);
  return out;
}

struct UnionResult {
  Graph graph;
  Vertex offset; // identifier shift applied to the second operand
};

// Second operand's identifiers are shifted past the first's; its labels are
// dropped when they would collide.
inline UnionResult disjoint_union(const Graph& a, const Graph& b) {
  UnionResult r{a, a.next_free_id()};
  for (Vertex v : b.vertices())
    r.graph.add_vertex(v + r.offset);
  for (const auto& [u, v] : b.edges())
    r.graph.add_edge(u + r.offset, v + r.offset);
  for (const auto& [v, name] : b.labels())
    if (!r.graph.find_label(name))
      r.graph.set_label(v + r.offset, name);
  return r;
}

// Renumbers vertices to 0..n-1 preserving their relative order.
inline Graph compact(const Graph& g, std::map<Vertex, Vertex>* mapping = nullptr) {
  std::map<Vertex, Vertex> index;
  Vertex next = 0;
  for (Vertex v : g.vertices())
    index[v] = next++;
  Graph out;
  for (Vertex i = 0; i < next; ++i)
    out.add_vertex(i);
  for (const auto& [u, v] : g.edges())
    out.add_edge(index[u], index[v]);
  for (const auto& [v, name] : g.labels())
    out.set_label(index[v], name);
  if (mapping)
    *mapping = std::move(index);
  return out;
}

inline Graph induced_subgraph(const Graph& g, const std::set<Vertex>& keep) {
  Graph out;
  for (Vertex v : keep) {
    if (!g.has_vertex(v))
      throw GraphError("induced_subgraph: unknown vertex " + std::to_string(v));
    out.add_vertex(v);
  }
  for (const auto& [u, v] : g.edges())
    if (keep.count(u) && keep.count(v))
      out.add_edge(u, v);
  for (const auto& [v, name] : g.labels())
    if (keep.count(v))
      out.set_label(v, name);
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0)
    return true;
  std::set<Vertex> seen;
  std::vector<Vertex> stack{g.vertices().front()};
  seen.insert(stack.back());
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (seen.insert(w).second)
        stack.push_back(w);
  }
  return seen.size() == g.vertex_count();
}

inline constexpr std::size_t kMinCycleLength = 3;
inline constexpr std::size_t kMaxCycleLength = 8;

// Every simple cycle with exactly `length` vertices, reported once. A cycle is
// listed starting at its smallest vertex, oriented so the second entry is
// smaller than the last. Output is sorted lexicographically.
inline std::vector<Cycle> cycles_of_length(const Graph& g, std::size_t length) {
  if (length < kMinCycleLength || length > kMaxCycleLength)
    throw GraphError("cycle length " + std::to_string(length) + " outside supported range 3..8");

  std::vector<Cycle> found;
  Cycle path;
  std::set<Vertex> on_path;

  // Extends `path` using only vertices larger than the start.
  auto extend = [&](auto&& self, Vertex start) -> void {
    Vertex tail = path.back();
    if (path.size() == length) {
      if (g.has_edge(tail, start) && path[1] < path.back())
        found.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(tail)) {
      if (w <= start || on_path.count(w))
        continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, start);
      on_path.erase(w);
      path.pop_back();
    }
  };

  for (Vertex s : g.vertices()) {
    path.assign(1, s);
    on_path = {s};
    extend(extend, s);
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline bool is_c4c5_free(const Graph& g) {
  return cycles_of_length(g, 4).empty() && cycles_of_length(g, 5).empty();
}

// Length of a shortest cycle; nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  for (Vertex root : g.vertices()) {
    std::map<Vertex, std::size_t> dist{{root, 0}};
    std::map<Vertex, Vertex> parent;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      if (best && 2 * dist[x] + 1 >= *best)
        break;
      for (Vertex y : g.neighbors(x)) {
        auto it = dist.find(y);
        if (it == dist.end()) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent.count(x) == 0 || parent[x] != y) {
          std::size_t len = dist[x] + it->second + 1;
          if (!best || len < *best)
            best = len;
        }
      }
    }
  }
  return best;
}

} // namespace defcol
