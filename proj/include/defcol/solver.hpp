#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "defcol/coloring.hpp"
#include "defcol/graph.hpp"

namespace defcol {

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Backtracking search with forward checking on defect slack.
//
// Per vertex we keep the set of colors still possible (bitmask), and for each
// color the number of colored neighbors carrying it. A vertex cannot take c
// once more than d_c neighbors have c; a colored vertex whose same-color count
// reached d_c removes its color from all uncolored neighbors. Singleton
// domains are assigned immediately.
class DefectSearch {
public:
  DefectSearch(const Graph& g, const ColoringSpec& spec, const ConstraintSet& cons, std::uint64_t budget)
      : spec_(spec), budget_(budget), verts_(g.vertices()), k_(spec.colors()) {
    if (k_ > 31)
      throw ColoringError("at most 31 colors are supported");
    const std::size_t n = verts_.size();
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
      index[verts_[i]] = i;
    adj_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex w : g.neighbors(verts_[i]))
        adj_[i].push_back(index[w]);
    cap_.resize(static_cast<std::size_t>(k_) + 1);
    for (Color c = 1; c <= k_; ++c)
      cap_[static_cast<std::size_t>(c)] = spec.defect(c);

    root_.color.assign(n, 0);
    root_.same.assign(n, 0);
    root_.count.assign(n * static_cast<std::size_t>(k_ + 1), 0);
    root_.domain.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (Color c = 1; c <= k_; ++c)
        if (cons.allows(verts_[i], c))
          root_.domain[i] |= bit(c);
  }

  SolveOutcome run() {
    SolveOutcome out;
    State s = root_;
    std::vector<std::size_t> queue;
    bool consistent = true;
    for (std::size_t i = 0; i < s.domain.size() && consistent; ++i) {
      if (s.domain[i] == 0)
        consistent = false;
      else if (std::popcount(s.domain[i]) == 1)
        queue.push_back(i);
    }
    if (consistent)
      consistent = propagate(s, queue);
    if (consistent) {
      try {
        if (search(s)) {
          out.verdict = Verdict::sat;
          for (std::size_t i = 0; i < verts_.size(); ++i)
            out.coloring[verts_[i]] = solution_[i];
        } else {
          out.verdict = Verdict::unsat;
        }
      } catch (const Exhausted&) {
        out.verdict = Verdict::budget_exceeded;
      }
    } else {
      out.verdict = Verdict::unsat;
    }
    out.nodes = nodes_;
    return out;
  }

private:
  struct Exhausted {};

  struct State {
    std::vector<Color> color; // 0 = not yet colored
    std::vector<int> same;
    std::vector<int> count; // count[i * (k+1) + c]
    std::vector<std::uint32_t> domain;
  };

  static std::uint32_t bit(Color c) { return 1u << (c - 1); }

  [[nodiscard]] std::size_t slot(std::size_t i, Color c) const {
    return i * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c);
  }

  bool remove(State& s, std::size_t y, Color c, std::vector<std::size_t>& queue) const {
    if (!(s.domain[y] & bit(c)))
      return true;
    s.domain[y] &= ~bit(c);
    if (s.domain[y] == 0)
      return false;
    if (std::popcount(s.domain[y]) == 1)
      queue.push_back(y);
    return true;
  }

  bool saturate(State& s, std::size_t x, Color c, std::vector<std::size_t>& queue) const {
    for (std::size_t y : adj_[x])
      if (s.color[y] == 0 && !remove(s, y, c, queue))
        return false;
    return true;
  }

  bool assign(State& s, std::size_t i, Color c, std::vector<std::size_t>& queue) const {
    if (!(s.domain[i] & bit(c)))
      return false;
    const int cap = cap_[static_cast<std::size_t>(c)];
    s.color[i] = c;
    s.domain[i] = bit(c);
    s.same[i] = s.count[slot(i, c)];
    if (s.same[i] > cap)
      return false;
    for (std::size_t j : adj_[i]) {
      int& seen = s.count[slot(j, c)];
      ++seen;
      if (s.color[j] == c) {
        if (++s.same[j] > cap)
          return false;
        if (s.same[j] == cap && !saturate(s, j, c, queue))
          return false;
      } else if (s.color[j] == 0 && seen > cap) {
        if (!remove(s, j, c, queue))
          return false;
      }
    }
    if (s.same[i] == cap && !saturate(s, i, c, queue))
      return false;
    return true;
  }

  bool propagate(State& s, std::vector<std::size_t>& queue) const {
    while (!queue.empty()) {
      std::size_t y = queue.back();
      queue.pop_back();
      if (s.color[y] != 0)
        continue;
      Color only = std::countr_zero(s.domain[y]) + 1;
      if (!assign(s, y, only, queue))
        return false;
    }
    return true;
  }

  // Smallest domain, then most colored neighbors, then highest degree, then
  // lowest identifier. Returns npos when every vertex is colored.
  [[nodiscard]] std::size_t choose(const State& s) const {
    std::size_t best = npos;
    int best_dom = 0, best_colored = 0, best_deg = 0;
    for (std::size_t i = 0; i < s.color.size(); ++i) {
      if (s.color[i] != 0)
        continue;
      int dom = std::popcount(s.domain[i]);
      int colored = 0;
      for (Color c = 1; c <= k_; ++c)
        colored += s.count[slot(i, c)];
      int deg = static_cast<int>(adj_[i].size());
      if (best == npos || dom < best_dom ||
          (dom == best_dom && (colored > best_colored || (colored == best_colored && deg > best_deg)))) {
        best = i;
        best_dom = dom;
        best_colored = colored;
        best_deg = deg;
      }
    }
    return best;
  }

  bool search(const State& s) {
    std::size_t v = choose(s);
    if (v == npos) {
      solution_ = s.color;
      return true;
    }
    for (Color c = 1; c <= k_; ++c) {
      if (!(s.domain[v] & bit(c)))
        continue;
      if (nodes_ >= budget_)
        throw Exhausted{};
      ++nodes_;
      State child = s;
      std::vector<std::size_t> queue;
      if (assign(child, v, c, queue) && propagate(child, queue) && search(child))
        return true;
    }
    return false;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  const ColoringSpec& spec_;
  std::uint64_t budget_;
  std::vector<Vertex> verts_;
  int k_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> cap_;
  State root_;
  std::vector<Color> solution_;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

// Exact search. Unsat is reported only after exhausting the search tree;
// running out of the node budget yields budget_exceeded. `nodes` counts
// branching decisions.
inline SolveOutcome solve(const Graph& g, const ColoringSpec& spec, const ConstraintSet& cons = {},
                          std::uint64_t budget = kUnlimitedBudget) {
  if (budget == 0)
    throw ColoringError("solve budget must be positive");
  cons.validate(g, spec);
  return detail::DefectSearch(g, spec, cons, budget).run();
}

// True iff colorability of g - v implies colorability of g.
inline bool deletion_preserves(const Graph& g, Vertex v, const ColoringSpec& spec,
                               std::uint64_t budget = kUnlimitedBudget) {
  auto smaller = solve(delete_vertex(g, v), spec, {}, budget);
  if (smaller.verdict == Verdict::budget_exceeded)
    throw BudgetError("budget exceeded on g - v");
  if (smaller.unsat())
    return true;
  auto whole = solve(g, spec, {}, budget);
  if (whole.verdict == Verdict::budget_exceeded)
    throw BudgetError("budget exceeded on g");
  return whole.sat();
}

} // namespace defcol
