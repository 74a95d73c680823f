#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcol/graph.hpp"

namespace defcol {

using Color = int; // 1..k

class ColoringError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Defect bounds (d_1, ..., d_k): color class i may induce maximum degree d_i.
struct ColoringSpec {
  std::vector<int> defects;

  ColoringSpec() = default;
  ColoringSpec(std::initializer_list<int> d) : defects(d) { validate(); }
  explicit ColoringSpec(std::vector<int> d) : defects(std::move(d)) { validate(); }

  // "d1,d2,..."
  static ColoringSpec parse(const std::string& text) {
    std::vector<int> d;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size())
          throw std::invalid_argument(tok);
        d.push_back(value);
      } catch (const std::exception&) {
        throw ColoringError("bad defect list '" + text + "'");
      }
    }
    return ColoringSpec(std::move(d));
  }

  [[nodiscard]] int colors() const { return static_cast<int>(defects.size()); }
  [[nodiscard]] int defect(Color c) const { return defects.at(static_cast<std::size_t>(c - 1)); }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < defects.size(); ++i)
      s += (i ? "," : "") + std::to_string(defects[i]);
    return s;
  }

  // Same number of colors and every bound at least as large.
  [[nodiscard]] bool dominates(const ColoringSpec& other) const {
    if (defects.size() != other.defects.size())
      return false;
    for (std::size_t i = 0; i < defects.size(); ++i)
      if (defects[i] < other.defects[i])
        return false;
    return true;
  }

private:
  void validate() const {
    if (defects.empty())
      throw ColoringError("a coloring spec needs at least one color");
    for (int d : defects)
      if (d < 0)
        throw ColoringError("defects must be non-negative");
  }
};

using Coloring = std::map<Vertex, Color>;

// Boundary conditions for the solvers.
struct ConstraintSet {
  std::map<Vertex, Color> forced;
  std::map<Vertex, std::set<Color>> forbidden;

  [[nodiscard]] bool empty() const { return forced.empty() && forbidden.empty(); }

  [[nodiscard]] bool allows(Vertex v, Color c) const {
    if (auto f = forced.find(v); f != forced.end() && f->second != c)
      return false;
    if (auto b = forbidden.find(v); b != forbidden.end() && b->second.count(c))
      return false;
    return true;
  }

  [[nodiscard]] bool satisfied_by(const Coloring& c) const {
    for (const auto& [v, color] : c)
      if (!allows(v, color))
        return false;
    return true;
  }

  void validate(const Graph& g, const ColoringSpec& spec) const {
    auto check = [&](Vertex v, Color c) {
      if (!g.has_vertex(v))
        throw ColoringError("constraint on unknown vertex " + std::to_string(v));
      if (c < 1 || c > spec.colors())
        throw ColoringError("constraint uses color " + std::to_string(c) + " outside 1.." +
                            std::to_string(spec.colors()));
    };
    for (const auto& [v, c] : forced)
      check(v, c);
    for (const auto& [v, colors] : forbidden)
      for (Color c : colors)
        check(v, c);
    for (const auto& [v, c] : forced)
      if (auto b = forbidden.find(v); b != forbidden.end() && b->second.count(c))
        throw ColoringError("vertex " + std::to_string(v) + " is both forced to and forbidden from color " +
                            std::to_string(c));
  }
};

enum class Verdict { sat, unsat, budget_exceeded };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::sat: return "sat";
  case Verdict::unsat: return "unsat";
  case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct SolveOutcome {
  Verdict verdict = Verdict::unsat;
  Coloring coloring; // populated only when verdict == sat
  std::uint64_t nodes = 0;

  [[nodiscard]] bool sat() const { return verdict == Verdict::sat; }
  [[nodiscard]] bool unsat() const { return verdict == Verdict::unsat; }
};

// Every vertex has at most d_{c(v)} neighbors of its own color.
inline bool is_valid_coloring(const Graph& g, const ColoringSpec& spec, const Coloring& c) {
  for (Vertex v : g.vertices()) {
    auto it = c.find(v);
    if (it == c.end())
      throw ColoringError("coloring leaves vertex " + std::to_string(v) + " uncolored");
    if (it->second < 1 || it->second > spec.colors())
      throw ColoringError("color " + std::to_string(it->second) + " outside 1.." + std::to_string(spec.colors()));
  }
  for (const auto& [v, color] : c)
    if (!g.has_vertex(v))
      throw ColoringError("coloring assigns unknown vertex " + std::to_string(v));
  for (Vertex v : g.vertices()) {
    Color cv = c.at(v);
    int same = 0;
    for (Vertex w : g.neighbors(v))
      if (c.at(w) == cv)
        ++same;
    if (same > spec.defect(cv))
      return false;
  }
  return true;
}

inline constexpr double kEnumerationCap = 1e8;

class EnumerationLimit : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Visits every valid coloring satisfying `cons` in lexicographic order (the
// lowest vertex is the most significant digit, color 1 first). The visitor
// returns false to stop. Returns the number of colorings visited.
inline std::uint64_t for_each_valid_coloring(const Graph& g, const ColoringSpec& spec, const ConstraintSet& cons,
                                             const std::function<bool(const Coloring&)>& visit) {
  cons.validate(g, spec);
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  const int k = spec.colors();
  double space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= k;
    if (space > kEnumerationCap)
      throw EnumerationLimit("brute-force enumeration over " + std::to_string(k) + "^" + std::to_string(n) +
                             " colorings exceeds the 1e8 cap");
  }
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    index[verts[i]] = i;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex w : g.neighbors(verts[i]))
      adj[i].push_back(index[w]);

  std::vector<Color> digit(n, 1);
  std::uint64_t visited = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!cons.allows(verts[i], digit[i])) {
        ok = false;
        break;
      }
      int same = 0;
      for (std::size_t j : adj[i])
        same += digit[j] == digit[i];
      ok = same <= spec.defect(digit[i]);
    }
    if (ok) {
      ++visited;
      Coloring c;
      for (std::size_t i = 0; i < n; ++i)
        c[verts[i]] = digit[i];
      if (!visit(c))
        return visited;
    }
    // odometer with the last vertex as least significant digit
    std::size_t pos = n;
    while (pos > 0 && digit[pos - 1] == k) {
      digit[pos - 1] = 1;
      --pos;
    }
    if (pos == 0)
      return visited;
    ++digit[pos - 1];
  }
}

// Exhaustive reference solver. Never reports budget_exceeded; `nodes` counts
// valid colorings inspected (0 or 1).
inline SolveOutcome brute_force_oracle(const Graph& g, const ColoringSpec& spec, const ConstraintSet& cons = {}) {
  SolveOutcome out;
  for_each_valid_coloring(g, spec, cons, [&](const Coloring& c) {
    out.verdict = Verdict::sat;
    out.coloring = c;
    return false;
  });
  out.nodes = out.sat() ? 1 : 0;
  return out;
}

inline std::uint64_t count_valid_colorings(const Graph& g, const ColoringSpec& spec, const ConstraintSet& cons = {}) {
  return for_each_valid_coloring(g, spec, cons, [](const Coloring&) { return true; });
}

// True iff every valid coloring of g - v leaves some color for v that keeps
// the whole coloring valid (v's own bound and its neighbors' bounds).
inline bool always_extends(const Graph& g, Vertex v, const ColoringSpec& spec) {
  if (!g.has_vertex(v))
    throw GraphError("always_extends: unknown vertex " + std::to_string(v));
  Graph rest = delete_vertex(g, v);
  bool every = true;
  for_each_valid_coloring(rest, spec, {}, [&](const Coloring& partial) {
    Coloring full = partial;
    for (Color c = 1; c <= spec.colors(); ++c) {
      full[v] = c;
      if (is_valid_coloring(g, spec, full))
        return true;
    }
    every = false;
    return false;
  });
  return every;
}

} // namespace defcol
