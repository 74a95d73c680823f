#pragma once

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "defcol/coloring.hpp"
#include "defcol/graph.hpp"

namespace defcol {

using Clause = std::vector<int>;

// DIMACS formula for a constrained (d_1..d_k)-coloring problem.
//
// Variable i*k + c (i = rank of the vertex among ascending identifiers,
// c = 1..k) means "vertex i has color c". Exactly one color per vertex.
// For every vertex v and color c with d_c below deg(v), a sequential counter
// over the neighbors' c-variables is defined with equivalences (register
// s(j,l) is true iff at least l of the first j neighbors have color c), and
// x(v,c) together with d_c + 1 neighbors of color c is forbidden. Registers
// are functions of the color variables, so models correspond one-to-one to
// valid colorings.
struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;
  std::vector<Vertex> vertex_order;
  int colors = 0;
  std::string spec;

  [[nodiscard]] int color_var(std::size_t vertex_rank, Color c) const {
    return static_cast<int>(vertex_rank) * colors + c;
  }

  // Projects a model (set of true literals, any order) onto a coloring.
  [[nodiscard]] Coloring decode(const std::vector<int>& model) const {
    std::vector<bool> truth(static_cast<std::size_t>(variables) + 1, false);
    for (int lit : model)
      if (lit > 0 && lit <= variables)
        truth[static_cast<std::size_t>(lit)] = true;
    Coloring out;
    for (std::size_t i = 0; i < vertex_order.size(); ++i)
      for (Color c = 1; c <= colors; ++c)
        if (truth[static_cast<std::size_t>(color_var(i, c))]) {
          out[vertex_order[i]] = c;
          break;
        }
    return out;
  }
};

inline CnfFormula export_cnf(const Graph& g, const ColoringSpec& spec, const ConstraintSet& cons = {}) {
  if (spec.colors() < 2)
    throw ColoringError("CNF export needs at least two colors");
  cons.validate(g, spec);

  CnfFormula f;
  f.colors = spec.colors();
  f.spec = spec.to_string();
  f.vertex_order = g.vertices();
  const int k = f.colors;
  std::map<Vertex, std::size_t> rank;
  for (std::size_t i = 0; i < f.vertex_order.size(); ++i)
    rank[f.vertex_order[i]] = i;
  f.variables = static_cast<int>(f.vertex_order.size()) * k;
  auto fresh = [&f] { return ++f.variables; };
  auto x = [&](Vertex v, Color c) { return f.color_var(rank.at(v), c); };
  auto& out = f.clauses;

  for (Vertex v : f.vertex_order) {
    Clause some;
    for (Color c = 1; c <= k; ++c)
      some.push_back(x(v, c));
    out.push_back(some);
    for (Color a = 1; a <= k; ++a)
      for (Color b = a + 1; b <= k; ++b)
        out.push_back({-x(v, a), -x(v, b)});
  }
  for (const auto& [v, c] : cons.forced)
    out.push_back({x(v, c)});
  for (const auto& [v, colors] : cons.forbidden)
    for (Color c : colors)
      out.push_back({-x(v, c)});

  for (Vertex v : f.vertex_order) {
    const auto& nbrs = g.neighbors(v);
    const int n = static_cast<int>(nbrs.size());
    for (Color c = 1; c <= k; ++c) {
      const int d = spec.defect(c);
      if (d >= n)
        continue;
      if (d == 0) {
        for (Vertex w : nbrs)
          if (v < w)
            out.push_back({-x(v, c), -x(w, c)});
        continue;
      }
      std::vector<int> lits;
      for (Vertex w : nbrs)
        lits.push_back(x(w, c));
      // reg[j][l] for j = 1..n-1, l = 1..d
      std::vector<std::vector<int>> reg(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(d) + 1, 0));
      for (int j = 1; j < n; ++j)
        for (int l = 1; l <= d; ++l)
          reg[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = fresh();
      auto s = [&](int j, int l) { return reg[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]; };
      for (int j = 1; j < n; ++j) {
        const int xj = lits[static_cast<std::size_t>(j - 1)];
        for (int l = 1; l <= d; ++l) {
          // s(j,l) <- s(j-1,l)
          if (j > 1)
            out.push_back({-s(j - 1, l), s(j, l)});
          // s(j,l) <- x_j & s(j-1,l-1)
          if (l == 1)
            out.push_back({-xj, s(j, l)});
          else if (j > 1)
            out.push_back({-xj, -s(j - 1, l - 1), s(j, l)});
          // s(j,l) -> s(j-1,l) | x_j
          if (j > 1)
            out.push_back({-s(j, l), s(j - 1, l), xj});
          else
            out.push_back({-s(j, l), xj});
          // s(j,l) -> s(j-1,l) | s(j-1,l-1)
          if (l > 1) {
            if (j > 1)
              out.push_back({-s(j, l), s(j - 1, l), s(j - 1, l - 1)});
            else
              out.push_back({-s(j, l)});
          }
        }
      }
      for (int j = 2; j <= n; ++j)
        out.push_back({-x(v, c), -lits[static_cast<std::size_t>(j - 1)], -s(j - 1, d)});
    }
  }
  return f;
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "c defcol cnf v1\n";
  out << "c spec " << f.spec << '\n';
  out << "c variable i*" << f.colors << "+c: vertex rank i (ascending id, 0-based) has color c\n";
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause)
      out << lit << ' ';
    out << "0\n";
  }
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

} // namespace defcol
