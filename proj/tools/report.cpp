#include "report.hpp"

#include <cstdio>

namespace berge5::cli {

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json rational_json(const Rational& r) {
  return Json{{"exact", to_string(r)}, {"value", to_double(r)}};
}

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

Json witness_json(const Hypergraph3& h, const BergeWitness& w) {
  Json edges = Json::array();
  for (EdgeId id : w.emap) edges.push_back(triple_json(h.edge(id)));
  return Json{{"vertices", w.vmap}, {"edge_ids", w.emap}, {"hyperedges", edges}};
}

Json report_json(const InequalityReport& r) {
  Json j{{"claim", r.claim},   {"subject", r.subject},   {"lhs", rational_json(r.lhs)},
         {"relation", r.relation}, {"rhs", r.rhs},     {"rhs_value", r.rhs_value},
         {"holds", r.holds},   {"asserted", r.asserted}, {"slack", r.slack},
         {"ratio", r.ratio}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json core_json(const CoreClass& c) {
  Json j{{"shape", to_string(c.shape)}, {"core_edges", c.core_edges}, {"anchors", c.anchors}};
  if (c.shape == CoreShape::Crown || c.shape == CoreShape::Empty) j["crown_size"] = c.crown_size;
  return j;
}

Json element_json(const DecompElement& e) {
  return Json{{"kind", to_string(e.kind)},
              {"vertices", e.vertices},
              {"block", e.block},
              {"provenance", e.provenance}};
}

Json alpha_json(const AlphaStats& s) {
  return Json{{"alpha1", rational_json(s.alpha1)},
              {"alpha2", rational_json(s.alpha2)},
              {"alpha_k4", rational_json(s.alpha_k4)},
              {"triangles", s.triangles},
              {"paths", s.paths},
              {"k4s", s.k4s},
              {"shadow_edges", s.shadow_edges}};
}

Json claim6_json(const Claim6Report& r) {
  return Json{{"claim", "6"},
              {"hyperedges", rational_json(r.hyperedges)},
              {"predicted", rational_json(r.predicted)},
              {"holds", r.holds}};
}

Json observation7_json(const Observation7Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"element", x.element}, {"reason", x.reason}});
  return Json{{"claim", "7"}, {"holds", r.holds()}, {"violations", v}};
}

Json bound_json(const BoundCurve& c) {
  return Json{{"function", "((4 - 2*a1 - a2)/12) * sqrt((5*a1 + 3*a2 + 3)/6)"},
              {"step", c.step},
              {"maximizer", Json::array({c.alpha1, c.alpha2})},
              {"maximum", c.maximum},
              {"upper_bound", c.upper_bound},
              {"error_bound", c.error_bound},
              {"grid_maximizer", Json::array({c.grid_alpha1, c.grid_alpha2})},
              {"grid_maximum", c.grid_maximum},
              {"grid_points", c.grid_points},
              {"certification_cells", c.cells},
              {"half_lower_bound_holds", c.half_lower_bound_holds}};
}

Json hypergraph_json(const Hypergraph3& h) {
  Json edges = Json::array();
  for (const Triple& t : h.edges()) edges.push_back(triple_json(t));
  return Json{{"n", h.vertex_count()}, {"m", h.edge_count()}, {"hyperedges", edges}};
}

Json search_json(const SearchResult& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"exact", r.exact},
              {"lower_bound", r.lower_bound},
              {"subproblems", r.subproblems},
              {"nodes", r.nodes},
              {"elapsed_seconds", r.elapsed_seconds},
              {"witness", hypergraph_json(r.witness)}};
}

Json envelope(const std::string& command) {
  return Json{{"schema", kSchema}, {"tool", "berge5"}, {"version", kVersion}, {"command", command}};
}

void add_input(Json& j, const std::string& path, const std::string& bytes, const H3File& f) {
  Json in{{"path", path},
          {"digest", digest(bytes)},
          {"n", f.hypergraph.vertex_count()},
          {"m", f.hypergraph.edge_count()}};
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    if (f.labels[i] != std::to_string(i)) {
      in["labels"] = f.labels;
      break;
    }
  }
  j["input"] = in;
}

}  // namespace berge5::cli
