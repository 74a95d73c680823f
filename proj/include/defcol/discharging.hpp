#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "defcol/embedding.hpp"
#include "defcol/graph.hpp"

namespace defcol {

using Charge = boost::rational<std::int64_t>;

// "p/q" with q >= 1, e.g. "-12/1", "6/5".
inline std::string to_fraction_string(const Charge& c) {
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

inline Charge parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Charge(std::stoll(text));
    return Charge(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad fraction '" + text + "'");
  }
}

// A vertex or a face (faces are numbered by their position in trace_faces).
struct Element {
  enum class Kind { vertex, face };
  Kind kind = Kind::vertex;
  std::uint32_t id = 0;

  static Element vertex(Vertex v) { return {Kind::vertex, v}; }
  static Element face(std::size_t f) { return {Kind::face, static_cast<std::uint32_t>(f)}; }

  [[nodiscard]] bool is_vertex() const { return kind == Kind::vertex; }
  [[nodiscard]] std::string to_string() const { return (is_vertex() ? "v" : "f") + std::to_string(id); }

  friend auto operator<=>(const Element&, const Element&) = default;
};

struct VertexTags {
  std::size_t degree = 0;
  bool good_2 = false; // 2-vertex on no 3-face
  bool bad_2 = false;  // 2-vertex on some 3-face
  std::vector<std::size_t> incident_3_faces; // one entry per corner
  std::vector<Vertex> good_2_neighbors;
  std::vector<std::size_t> pendant_3_faces;
  std::size_t alpha = 0, beta = 0, gamma = 0;
};

struct FaceTags {
  std::size_t degree = 0;
  bool bad_3 = false; // 3-face with a 2-vertex on it
  bool good_3 = false;
  std::vector<std::size_t> signature; // sorted corner degrees
};

struct StructureTags {
  std::vector<Face> faces;
  std::map<Vertex, VertexTags> vertices;
  std::vector<FaceTags> face_tags;
};

class DischargeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline void require_certified(const PlaneEmbedding& emb) {
  bool planar = false;
  try {
    planar = check_planarity_certificate(emb);
  } catch (const EmbeddingError& e) {
    throw DischargeError(e.what());
  }
  if (!planar)
    throw DischargeError("embedding fails the Euler check (V - E + F != 2)");
}

// Degree classes, good/bad 2-vertices and 3-faces, pendant 3-faces, and the
// per-vertex counts alpha (incident 3-faces), beta (adjacent good 2-vertices)
// and gamma (pendant 3-faces).
inline StructureTags classify(const PlaneEmbedding& emb) {
  require_certified(emb);
  const Graph& g = emb.graph();
  StructureTags t;
  t.faces = trace_faces(emb);
  t.face_tags.resize(t.faces.size());

  std::map<Vertex, std::set<std::size_t>> faces_at;
  for (Vertex v : g.vertices())
    t.vertices[v].degree = g.degree(v);
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    auto& ft = t.face_tags[f];
    ft.degree = t.faces[f].degree();
    for (Vertex c : t.faces[f].corners()) {
      ft.signature.push_back(g.degree(c));
      faces_at[c].insert(f);
      if (ft.degree == 3)
        t.vertices[c].incident_3_faces.push_back(f);
    }
    std::sort(ft.signature.begin(), ft.signature.end());
  }
  for (auto& [v, vt] : t.vertices) {
    if (vt.degree == 2) {
      vt.bad_2 = !vt.incident_3_faces.empty();
      vt.good_2 = !vt.bad_2;
    }
  }
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    auto& ft = t.face_tags[f];
    if (ft.degree != 3)
      continue;
    for (Vertex c : t.faces[f].corners())
      if (t.vertices[c].degree == 2)
        ft.bad_3 = true;
    ft.good_3 = !ft.bad_3;
  }
  for (auto& [v, vt] : t.vertices) {
    std::set<std::size_t> pendant;
    for (Vertex w : g.neighbors(v)) {
      const auto& wt = t.vertices[w];
      if (wt.good_2)
        vt.good_2_neighbors.push_back(w);
      if (wt.degree != 3)
        continue;
      for (std::size_t f : wt.incident_3_faces)
        if (!faces_at[v].count(f))
          pendant.insert(f);
    }
    vt.pendant_3_faces.assign(pendant.begin(), pendant.end());
    vt.alpha = vt.incident_3_faces.size();
    vt.beta = vt.good_2_neighbors.size();
    vt.gamma = vt.pendant_3_faces.size();
  }
  return t;
}

using ChargeLedger = std::map<Element, Charge>;

inline Charge total(const ChargeLedger& ledger) {
  Charge sum(0);
  for (const auto& [e, c] : ledger)
    sum += c;
  return sum;
}

// mu(v) = 2 d(v) - 6, mu(f) = d(f) - 6; sums to -12 on any plane embedding.
inline ChargeLedger initial_charges(const PlaneEmbedding& emb) {
  require_certified(emb);
  ChargeLedger ledger;
  for (Vertex v : emb.graph().vertices())
    ledger[Element::vertex(v)] = Charge(2 * static_cast<std::int64_t>(emb.graph().degree(v)) - 6);
  auto faces = trace_faces(emb);
  for (std::size_t f = 0; f < faces.size(); ++f)
    ledger[Element::face(f)] = Charge(static_cast<std::int64_t>(faces[f].degree()) - 6);
  return ledger;
}

enum class SourceKind { vertex_of_degree, face_of_degree, bad_3_face };

enum class TargetKind { adjacent_good_2_vertex, incident_3_face, pendant_3_face, incident_bad_2_vertex, incident_2_vertex };

inline const char* to_string(TargetKind t) {
  switch (t) {
  case TargetKind::adjacent_good_2_vertex: return "adjacent good 2-vertex";
  case TargetKind::incident_3_face: return "incident 3-face";
  case TargetKind::pendant_3_face: return "pendant 3-face";
  case TargetKind::incident_bad_2_vertex: return "incident bad 2-vertex";
  case TargetKind::incident_2_vertex: return "incident 2-vertex";
  }
  return "?";
}

struct Rule {
  std::string id;
  SourceKind source;
  std::size_t min_degree = 0;              // vertex/face sources
  std::optional<std::size_t> max_degree;   // none = unbounded
  TargetKind target;
  Charge amount;

  [[nodiscard]] bool degree_matches(std::size_t d) const {
    return d >= min_degree && (!max_degree || d <= *max_degree);
  }

  [[nodiscard]] std::string describe() const {
    std::string src;
    auto range = [&](const char* what) {
      std::string s = std::to_string(min_degree);
      if (!max_degree)
        s += "+";
      else if (*max_degree != min_degree)
        s += ".." + std::to_string(*max_degree);
      return s + "-" + what;
    };
    switch (source) {
    case SourceKind::vertex_of_degree: src = range("vertex"); break;
    case SourceKind::face_of_degree: src = range("face"); break;
    case SourceKind::bad_3_face: src = "bad 3-face"; break;
    }
    return src + " sends " + to_fraction_string(amount) + " to each " + to_string(target);
  }
};

// Rules all read the initial classification; transfers are summed.
struct DischargeRuleSet {
  std::string name;
  std::vector<Rule> rules;
};

namespace detail {

inline Rule from_vertices(std::string id, std::size_t lo, std::optional<std::size_t> hi, TargetKind t, Charge amount) {
  return Rule{std::move(id), SourceKind::vertex_of_degree, lo, hi, t, amount};
}

inline Rule from_big_faces(std::string id, TargetKind t) {
  return Rule{std::move(id), SourceKind::face_of_degree, 7, std::nullopt, t, Charge(1)};
}

inline Rule from_bad_triangles(std::string id) {
  return Rule{std::move(id), SourceKind::bad_3_face, 3, 3, TargetKind::incident_2_vertex, Charge(1)};
}

} // namespace detail

// Rules for (4,4).
inline DischargeRuleSet rules_44() {
  using namespace detail;
  using T = TargetKind;
  return {"R44",
          {from_vertices("R1", 6, std::nullopt, T::adjacent_good_2_vertex, Charge(1)),
           from_vertices("R2", 6, std::nullopt, T::incident_3_face, Charge(2)),
           from_vertices("R3", 6, std::nullopt, T::pendant_3_face, Charge(1)),
           from_big_faces("R4", T::incident_bad_2_vertex),
           from_vertices("R5", 4, 5, T::incident_3_face, Charge(1)),
           from_bad_triangles("R6")}};
}

// Rules for (3,5).
inline DischargeRuleSet rules_35() {
  using namespace detail;
  using T = TargetKind;
  return {"R35",
          {from_vertices("R1", 5, 5, T::adjacent_good_2_vertex, Charge(4, 5)),
           from_vertices("R2", 5, 5, T::incident_3_face, Charge(8, 5)),
           from_vertices("R3", 5, 5, T::pendant_3_face, Charge(4, 5)),
           from_vertices("R4", 6, 6, T::adjacent_good_2_vertex, Charge(1)),
           from_vertices("R5", 6, 7, T::incident_3_face, Charge(2)),
           from_vertices("R6", 6, 6, T::pendant_3_face, Charge(1)),
           from_vertices("R7", 7, std::nullopt, T::adjacent_good_2_vertex, Charge(6, 5)),
           from_vertices("R8", 8, std::nullopt, T::incident_3_face, Charge(12, 5)),
           from_vertices("R9", 7, std::nullopt, T::pendant_3_face, Charge(6, 5)),
           from_big_faces("R10", T::incident_bad_2_vertex),
           from_vertices("R11", 4, 4, T::incident_3_face, Charge(1)),
           from_bad_triangles("R12")}};
}

// Rules for (2,9).
inline DischargeRuleSet rules_29() {
  using namespace detail;
  using T = TargetKind;
  return {"R29",
          {from_vertices("R1", 4, 10, T::adjacent_good_2_vertex, Charge(1, 2)),
           from_vertices("R2", 4, 4, T::incident_3_face, Charge(1)),
           from_vertices("R3", 4, 10, T::pendant_3_face, Charge(1, 2)),
           from_vertices("R4", 5, 10, T::incident_3_face, Charge(3, 2)),
           from_vertices("R5", 11, 11, T::incident_3_face, Charge(5, 2)),
           from_vertices("R6", 11, std::nullopt, T::adjacent_good_2_vertex, Charge(3, 2)),
           from_vertices("R7", 12, std::nullopt, T::incident_3_face, Charge(3)),
           from_vertices("R8", 11, std::nullopt, T::pendant_3_face, Charge(3, 2)),
           from_big_faces("R9", T::incident_bad_2_vertex),
           from_bad_triangles("R10")}};
}

// Accepts "44", "35", "29" or the set names "R44", "R35", "R29".
inline DischargeRuleSet ruleset_by_name(const std::string& name) {
  if (name == "44" || name == "R44")
    return rules_44();
  if (name == "35" || name == "R35")
    return rules_35();
  if (name == "29" || name == "R29")
    return rules_29();
  throw DischargeError("unknown rule set '" + name + "' (expected 44, 35 or 29)");
}

struct Transfer {
  Element from;
  Element to;
  Charge amount;
  std::string rule;
};

struct DischargeResult {
  StructureTags tags;
  ChargeLedger initial;
  ChargeLedger final;
  std::vector<Transfer> log;
};

// Every rule is evaluated against the initial structure and the resulting
// transfers are summed. Face-incidence targets are counted per corner;
// pendant targets once per (vertex, face) pair. The log is ordered by rule,
// then source element, then target.
inline DischargeResult apply_ruleset(const PlaneEmbedding& emb, const DischargeRuleSet& rules) {
  DischargeResult r;
  r.tags = classify(emb);
  r.initial = initial_charges(emb);
  const auto& t = r.tags;

  for (const Rule& rule : rules.rules) {
    auto emit = [&](Element from, Element to) { r.log.push_back({from, to, rule.amount, rule.id}); };
    switch (rule.source) {
    case SourceKind::vertex_of_degree:
      for (const auto& [v, vt] : t.vertices) {
        if (!rule.degree_matches(vt.degree))
          continue;
        switch (rule.target) {
        case TargetKind::adjacent_good_2_vertex:
          for (Vertex w : vt.good_2_neighbors)
            emit(Element::vertex(v), Element::vertex(w));
          break;
        case TargetKind::incident_3_face:
          for (std::size_t f : vt.incident_3_faces)
            emit(Element::vertex(v), Element::face(f));
          break;
        case TargetKind::pendant_3_face:
          for (std::size_t f : vt.pendant_3_faces)
            emit(Element::vertex(v), Element::face(f));
          break;
        default:
          throw DischargeError("rule " + rule.id + ": vertices cannot send to " + to_string(rule.target));
        }
      }
      break;
    case SourceKind::face_of_degree:
    case SourceKind::bad_3_face:
      for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const auto& ft = t.face_tags[f];
        bool selected = rule.source == SourceKind::bad_3_face ? ft.bad_3 : rule.degree_matches(ft.degree);
        if (!selected)
          continue;
        for (Vertex c : t.faces[f].corners()) {
          const auto& ct = t.vertices.at(c);
          bool hit = false;
          if (rule.target == TargetKind::incident_bad_2_vertex)
            hit = ct.bad_2;
          else if (rule.target == TargetKind::incident_2_vertex)
            hit = ct.degree == 2;
          else
            throw DischargeError("rule " + rule.id + ": faces cannot send to " + to_string(rule.target));
          if (hit)
            emit(Element::face(f), Element::vertex(c));
        }
      }
      break;
    }
  }

  r.final = r.initial;
  for (const auto& tr : r.log) {
    r.final[tr.from] -= tr.amount;
    r.final[tr.to] += tr.amount;
  }
  return r;
}

// Exact equality of totals over identical element sets.
inline bool verify_conservation(const ChargeLedger& initial, const ChargeLedger& final) {
  if (initial.size() != final.size() ||
      !std::equal(initial.begin(), initial.end(), final.begin(),
                  [](const auto& a, const auto& b) { return a.first == b.first; }))
    throw DischargeError("ledgers cover different elements");
  return total(initial) == total(final);
}

inline std::vector<std::pair<Element, Charge>> negative_elements(const ChargeLedger& ledger) {
  std::vector<std::pair<Element, Charge>> out;
  for (const auto& [e, c] : ledger)
    if (c < 0)
      out.emplace_back(e, c);
  return out;
}

} // namespace defcol
