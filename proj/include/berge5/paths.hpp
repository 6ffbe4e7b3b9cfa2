#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge5/decompose.hpp"
#include "berge5/hypergraph.hpp"
#include "berge5/rational.hpp"

namespace berge5 {

// Constants of the good 3-path counting argument.
struct PathConstants {
  static constexpr std::int64_t C0 = 5440;
  static constexpr std::int64_t C1 = 92160;
  static constexpr std::int64_t C2 = 31360;
  static constexpr std::int64_t C3 = 92160;
  static constexpr std::int64_t C4 = C1 + C2 + C3 + 2 * C0;
  static constexpr std::int64_t kMaxDegree = 160;  // max d_G < 160 sqrt(n)
};

// Outcome of one inequality on one subject (a vertex, an element, a graph).
// `slack` is positive exactly when the relation holds with room to spare;
// `ratio` is lhs / rhs (0 when rhs is 0).
struct InequalityReport {
  std::string claim;
  std::string subject;
  Rational lhs;
  std::string rhs;  // exact expression, e.g. "8*21 + 92160*sqrt(21)"
  double rhs_value = 0.0;
  std::string relation;  // "<", "<=" or ">="
  bool holds = false;
  bool asserted = true;  // false for report-only quantities
  double slack = 0.0;
  double ratio = 0.0;
  std::string note;
};

// All counts below are of ordered walks/paths.

// Sequences v0 v1 v2 v3 with consecutive vertices adjacent (repeats allowed).
std::uint64_t count_3walks(const ShadowGraph& g);

// count_3walks(G) >= n * avg_deg^3, i.e. walks * n^2 >= 8 |E|^3.
InequalityReport blakley_roy_check(const ShadowGraph& g);

enum class PathKind { Good, Bad };

// x-y-z with xy, yz edges and x != z; bad when xz is an edge too, i.e. both
// edges sit in the triangle xyz. Throws std::invalid_argument otherwise.
PathKind classify_2path(const ShadowGraph& g, Vertex x, Vertex y, Vertex z);

// Both 2-subpaths good. Throws std::invalid_argument if p is not a path.
bool is_good_3path(const ShadowGraph& g, const std::array<Vertex, 4>& p);

struct PathStats {
  std::uint64_t walks3 = 0;
  std::uint64_t good3 = 0;
  std::uint64_t bad2 = 0;
  std::vector<std::uint64_t> good2_from;  // good 2-paths v x y, per start v

  bool operator==(const PathStats&) const = default;
};

PathStats count_good_3paths(const ShadowGraph& g);

// Good 3-paths whose first edge is {u, v}, in either direction.
std::uint64_t good_3paths_from_edge(const ShadowGraph& g, Vertex u, Vertex v);

// A path with exactly `length` edges, or nullopt. Exact depth-bounded DFS.
std::optional<std::vector<Vertex>> find_path(const ShadowGraph& g, std::size_t length);

// Number of edges of a longest path; nullopt when some component has more
// than `cap` vertices.
std::optional<std::size_t> longest_path(const ShadowGraph& g, std::size_t cap = 20);

// If G has no path with k edges then |E| <= (k-1)|V'|/2, V' the non-isolated
// vertices. When such a path exists the bound does not apply and the report
// holds vacuously.
InequalityReport erdos_gallai_check(const ShadowGraph& g, std::size_t k);

// |L_v| <= 2|N(v)| for every non-isolated v, plus "no path of length 5 in
// L_v".
std::vector<InequalityReport> verify_claim8(const Hypergraph3& h);

// |G[N(v)]| < 8|N(v)| for every non-isolated v, plus |G_v| < 6|N(v)| and no
// path of length 12 in G_v when |N(v)| <= 20.
std::vector<InequalityReport> verify_neighborhood_lemma(const Hypergraph3& h);

// |P| < 2|M'| + 48 d_G(v) for the good 2-paths v x y with x in M and their
// endpoint set M'. Throws std::invalid_argument unless M is a subset of
// N(v). For an isolated v the inequality reads 0 < 0 and is reported as
// vacuous.
InequalityReport verify_lemma9(const Hypergraph3& h, Vertex v, const std::vector<Vertex>& m);

// verify_lemma9 with M = N(v) for every non-isolated v.
std::vector<InequalityReport> verify_lemma9_all(const Hypergraph3& h);

// good 3-paths >= n avg^3 - C0 n^{3/2} avg, avg the average shadow degree.
InequalityReport verify_claim12(const Hypergraph3& h);

// One report per decomposition element: good 3-paths starting in a triangle
// (<= 8n + C1 sqrt n), a 2-path (<= 4n + C2 sqrt n), a K4 (<= 6n + C3 sqrt n).
std::vector<InequalityReport> verify_claims13_14_15(const Hypergraph3& h, const Decomposition& d);

// Max shadow degree after peeling at ratio 1/3, against 160 sqrt(n').
// Report only.
InequalityReport claim10_report(const Hypergraph3& h);

}  // namespace berge5
