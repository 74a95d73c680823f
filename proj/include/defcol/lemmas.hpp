#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "defcol/discharging.hpp"
#include "defcol/embedding.hpp"
#include "defcol/graph.hpp"

namespace defcol {

// Degenerate: the structure lies outside the statement's hypotheses and the
// conclusion does not hold there. Never counted as a failure.
enum class CheckVerdict { pass, fail, degenerate };

inline const char* to_string(CheckVerdict v) {
  switch (v) {
  case CheckVerdict::pass: return "pass";
  case CheckVerdict::fail: return "fail";
  case CheckVerdict::degenerate: return "degenerate";
  }
  return "?";
}

struct Finding {
  Element element;
  CheckVerdict verdict;
  std::string witness;
};

struct LemmaReport {
  std::string name;
  CheckVerdict verdict = CheckVerdict::pass;
  std::string reason; // set when the whole report is degenerate
  std::vector<Finding> findings;
  std::vector<std::string> notes;

  [[nodiscard]] std::size_t count(CheckVerdict v) const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [v](const Finding& f) { return f.verdict == v; }));
  }
};

namespace detail {

// Shared hypotheses: connected, Euler-certified, no 4- or 5-cycles.
inline std::optional<std::string> lemma_precondition_failure(const PlaneEmbedding& emb) {
  const Graph& g = emb.graph();
  if (g.vertex_count() == 0 || !is_connected(g))
    return "graph is not connected";
  if (!check_planarity_certificate(emb))
    return "embedding fails the Euler check";
  if (!is_c4c5_free(g))
    return "graph contains a 4-cycle or a 5-cycle";
  return std::nullopt;
}

inline void summarize(LemmaReport& r) {
  if (r.count(CheckVerdict::fail))
    r.verdict = CheckVerdict::fail;
  else if (r.count(CheckVerdict::degenerate))
    r.verdict = CheckVerdict::degenerate;
  else
    r.verdict = CheckVerdict::pass;
}

inline std::set<Vertex> corner_set(const Face& f) {
  auto c = f.corners();
  return {c.begin(), c.end()};
}

// A 3-face whose vertex set is also bounded by another 3-face (only K3).
inline bool has_twin_triangle(const StructureTags& t, std::size_t f) {
  auto mine = corner_set(t.faces[f]);
  for (std::size_t h = 0; h < t.faces.size(); ++h)
    if (h != f && t.face_tags[h].degree == 3 && corner_set(t.faces[h]) == mine)
      return true;
  return false;
}

inline LemmaReport degenerate_report(std::string name, std::string reason) {
  LemmaReport r{std::move(name), CheckVerdict::degenerate, std::move(reason), {}, {}};
  return r;
}

} // namespace detail

// A 2-vertex on a bad 3-face has its other face of degree at least 7.
// Needs the other face to be a distinct cycle on a different vertex set.
inline LemmaReport check_lemma3(const PlaneEmbedding& emb) {
  if (auto why = detail::lemma_precondition_failure(emb))
    return detail::degenerate_report("lemma3", *why);
  LemmaReport r{"lemma3", CheckVerdict::pass, "", {}, {}};
  auto t = classify(emb);
  std::map<Dart, std::size_t> face_of;
  for (std::size_t f = 0; f < t.faces.size(); ++f)
    for (const Dart& d : t.faces[f].walk)
      face_of[d] = f;

  for (const auto& [v, vt] : t.vertices) {
    if (!vt.bad_2)
      continue;
    const auto& nbrs = emb.graph().neighbors(v);
    std::size_t f1 = face_of.at({v, *nbrs.begin()});
    std::size_t f2 = face_of.at({v, *nbrs.rbegin()});
    for (std::size_t f : vt.incident_3_faces) {
      Finding finding{Element::vertex(v), CheckVerdict::pass, ""};
      if (f1 == f2) {
        finding.witness = "both sides of v" + std::to_string(v) + " are face f" + std::to_string(f1);
        finding.verdict = CheckVerdict::degenerate;
        r.findings.push_back(finding);
        continue;
      }
      std::size_t other = f == f1 ? f2 : f1;
      const Face& g = t.faces[other];
      finding.witness = "triangle f" + std::to_string(f) + ", other face f" + std::to_string(other) + " of degree " +
                        std::to_string(g.degree());
      bool in_scope = g.is_simple_cycle() && detail::corner_set(g) != detail::corner_set(t.faces[f]);
      if (g.degree() >= 7)
        finding.verdict = CheckVerdict::pass;
      else
        finding.verdict = in_scope ? CheckVerdict::fail : CheckVerdict::degenerate;
      if (!in_scope)
        finding.witness += " (other face is not a cycle distinct from the triangle)";
      r.findings.push_back(finding);
    }
  }
  detail::summarize(r);
  return r;
}

// A face of degree k >= 7 has at most k - 6 bad 2-vertex corners.
// Needs the face boundary to be a cycle.
inline LemmaReport check_lemma4(const PlaneEmbedding& emb) {
  if (auto why = detail::lemma_precondition_failure(emb))
    return detail::degenerate_report("lemma4", *why);
  LemmaReport r{"lemma4", CheckVerdict::pass, "", {}, {}};
  auto t = classify(emb);
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    const std::size_t k = t.faces[f].degree();
    if (k < 7)
      continue;
    std::size_t bad = 0;
    for (Vertex c : t.faces[f].corners())
      bad += t.vertices.at(c).bad_2 ? 1 : 0;
    Finding finding{Element::face(f), CheckVerdict::pass,
                    "degree " + std::to_string(k) + ", bad 2-vertex corners " + std::to_string(bad) + ", bound " +
                        std::to_string(k - 6)};
    if (bad > k - 6)
      finding.verdict = t.faces[f].is_simple_cycle() ? CheckVerdict::fail : CheckVerdict::degenerate;
    r.findings.push_back(finding);
  }
  detail::summarize(r);
  return r;
}

// alpha <= floor(d/2) and 2 alpha + beta + gamma <= d at every vertex. The
// alternate weighting 2 beta + alpha + gamma <= d is evaluated as well and
// only reported in the notes.
inline LemmaReport check_prop1b(const PlaneEmbedding& emb) {
  if (auto why = detail::lemma_precondition_failure(emb))
    return detail::degenerate_report("prop1b", *why);
  LemmaReport r{"prop1b", CheckVerdict::pass, "", {}, {}};
  auto t = classify(emb);
  std::size_t alternate_violations = 0;
  for (const auto& [v, vt] : t.vertices) {
    const std::size_t d = vt.degree;
    const std::size_t weighted = 2 * vt.alpha + vt.beta + vt.gamma;
    const std::size_t alternate = 2 * vt.beta + vt.alpha + vt.gamma;
    Finding finding{Element::vertex(v), CheckVerdict::pass,
                    "d=" + std::to_string(d) + " alpha=" + std::to_string(vt.alpha) + " beta=" +
                        std::to_string(vt.beta) + " gamma=" + std::to_string(vt.gamma) +
                        " 2a+b+g=" + std::to_string(weighted) + " 2b+a+g=" + std::to_string(alternate)};
    if (alternate > d)
      ++alternate_violations;
    if (vt.alpha > d / 2 || weighted > d) {
      bool twin = std::any_of(vt.incident_3_faces.begin(), vt.incident_3_faces.end(),
                              [&](std::size_t f) { return detail::has_twin_triangle(t, f); });
      finding.verdict = twin ? CheckVerdict::degenerate : CheckVerdict::fail;
    }
    r.findings.push_back(finding);
  }
  r.notes.push_back("alternate weighting 2*beta + alpha + gamma <= d violated at " +
                    std::to_string(alternate_violations) + " vertices");
  detail::summarize(r);
  return r;
}

} // namespace defcol
