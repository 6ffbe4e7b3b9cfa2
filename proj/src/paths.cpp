#include "berge5/paths.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "berge5/parallel.hpp"

namespace berge5 {

namespace {

std::size_t common_neighbors(const ShadowGraph& g, Vertex u, Vertex v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::string sqrt_term(std::int64_t coeff, std::size_t n) {
  return std::to_string(coeff) + "*sqrt(" + std::to_string(n) + ")";
}

void finish(InequalityReport& r) {
  const double lhs = to_double(r.lhs);
  r.slack = r.relation == ">=" ? lhs - r.rhs_value : r.rhs_value - lhs;
  r.ratio = r.rhs_value != 0.0 ? lhs / r.rhs_value : 0.0;
}

InequalityReport make_report(std::string claim, std::string subject, Rational lhs, std::string rhs,
                             double rhs_value, std::string relation, bool holds) {
  InequalityReport r;
  r.claim = std::move(claim);
  r.subject = std::move(subject);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.rhs_value = rhs_value;
  r.relation = std::move(relation);
  r.holds = holds;
  finish(r);
  return r;
}

std::string vertex_subject(Vertex v) { return "v=" + std::to_string(v); }

std::string path_string(const std::vector<Vertex>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(p[i]);
  }
  return s;
}

bool extend_path(const ShadowGraph& g, std::vector<Vertex>& path, std::vector<char>& on_path,
                 std::size_t length) {
  if (path.size() == length + 1) return true;
  for (Vertex w : g.neighbors(path.back())) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    if (extend_path(g, path, on_path, length)) return true;
    path.pop_back();
    on_path[w] = 0;
  }
  return false;
}

// G_v: pairs of N(v) covered by a hyperedge avoiding v.
ShadowGraph graph_gv(const Hypergraph3& h, const ShadowGraph& g, Vertex v) {
  std::vector<VertexPair> pairs;
  for (const Triple& t : h.edges()) {
    if (t[0] == v || t[1] == v || t[2] == v) continue;
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : kPairs) {
      const Vertex x = t[pr[0]];
      const Vertex y = t[pr[1]];
      if (g.adjacent(v, x) && g.adjacent(v, y)) pairs.emplace_back(x, y);
    }
  }
  return ShadowGraph::from_edges(h.vertex_count(), pairs);
}

std::size_t neighborhood_edges(const ShadowGraph& g, Vertex v) {
  std::size_t count = 0;
  for (Vertex x : g.neighbors(v)) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && g.adjacent(v, y)) ++count;
    }
  }
  return count;
}

InequalityReport lemma9_report(const ShadowGraph& g, Vertex v, const std::vector<Vertex>& m) {
  for (Vertex x : m) {
    if (x >= g.vertex_count() || !g.adjacent(v, x)) {
      throw std::invalid_argument("M contains " + std::to_string(x) + ", which is not a neighbour of " +
                                  std::to_string(v));
    }
  }
  std::vector<Vertex> sorted_m = m;
  std::sort(sorted_m.begin(), sorted_m.end());
  sorted_m.erase(std::unique(sorted_m.begin(), sorted_m.end()), sorted_m.end());

  std::vector<char> in_mprime(g.vertex_count(), 0);
  std::size_t paths = 0;
  std::size_t mprime = 0;
  for (Vertex x : sorted_m) {
    for (Vertex y : g.neighbors(x)) {
      if (y == v || g.adjacent(v, y)) continue;
      ++paths;
      if (!in_mprime[y]) {
        in_mprime[y] = 1;
        ++mprime;
      }
    }
  }
  const std::size_t dv = g.degree(v);
  const std::size_t rhs = 2 * mprime + 48 * dv;
  InequalityReport r = make_report("9", vertex_subject(v), Rational(paths),
                                   "2*" + std::to_string(mprime) + " + 48*" + std::to_string(dv),
                                   static_cast<double>(rhs), "<", paths < rhs);
  if (dv == 0) {
    r.holds = true;
    r.note = "vacuous: isolated vertex";
  }
  return r;
}

std::vector<Vertex> non_isolated(const ShadowGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) out.push_back(v);
  }
  return out;
}

}  // namespace

std::uint64_t count_3walks(const ShadowGraph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t around = 0;
    for (Vertex u : g.neighbors(v)) around += g.degree(u);
    total += g.degree(v) * around;
  }
  return total;
}

InequalityReport blakley_roy_check(const ShadowGraph& g) {
  const BigInt n = g.vertex_count();
  const BigInt m = g.edge_count();
  const BigInt walks = count_3walks(g);
  Rational rhs = 0;
  if (n > 0) rhs = Rational(8 * m * m * m, n * n);
  const bool holds = n == 0 || walks * n * n >= 8 * m * m * m;
  InequalityReport r = make_report("blakley-roy", "graph", Rational(walks),
                                   "n*avg^3 = " + to_string(rhs), to_double(rhs), ">=", holds);
  return r;
}

PathKind classify_2path(const ShadowGraph& g, Vertex x, Vertex y, Vertex z) {
  const std::size_t n = g.vertex_count();
  if (x >= n || y >= n || z >= n || x == z || !g.adjacent(x, y) || !g.adjacent(y, z)) {
    throw std::invalid_argument("not a 2-path of the graph");
  }
  return g.adjacent(x, z) ? PathKind::Bad : PathKind::Good;
}

bool is_good_3path(const ShadowGraph& g, const std::array<Vertex, 4>& p) {
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i] >= n) throw std::invalid_argument("not a 3-path of the graph");
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) throw std::invalid_argument("not a 3-path of the graph");
    }
  }
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    if (!g.adjacent(p[i], p[i + 1])) throw std::invalid_argument("not a 3-path of the graph");
  }
  return !g.adjacent(p[0], p[2]) && !g.adjacent(p[1], p[3]);
}

PathStats count_good_3paths(const ShadowGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> good3(n, 0);
  std::vector<std::uint64_t> bad2(n, 0);
  PathStats s;
  s.good2_from.assign(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const Vertex x1 = static_cast<Vertex>(i);
    const std::uint64_t d1 = g.degree(x1);
    for (Vertex x2 : g.neighbors(x1)) {
      const std::uint64_t c = common_neighbors(g, x1, x2);
      const std::uint64_t d2 = g.degree(x2);
      // x0 in N(x1) - x2 not adjacent to x2; x3 in N(x2) - x1 not adjacent
      // to x1. Such x0 and x3 are automatically distinct.
      good3[i] += (d1 - 1 - c) * (d2 - 1 - c);
      bad2[i] += c;
      s.good2_from[i] += d2 - 1 - c;
    }
  });
  s.walks3 = count_3walks(g);
  for (std::size_t i = 0; i < n; ++i) {
    s.good3 += good3[i];
    s.bad2 += bad2[i];
  }
  return s;
}

std::uint64_t good_3paths_from_edge(const ShadowGraph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) {
    throw std::invalid_argument("not an edge of the graph");
  }
  std::uint64_t total = 0;
  const Vertex ends[2][2] = {{u, v}, {v, u}};
  for (const auto& e : ends) {
    const Vertex x0 = e[0];
    const Vertex x1 = e[1];
    for (Vertex x2 : g.neighbors(x1)) {
      if (x2 == x0 || g.adjacent(x0, x2)) continue;
      total += g.degree(x2) - 1 - common_neighbors(g, x1, x2);
    }
  }
  return total;
}

std::optional<std::vector<Vertex>> find_path(const ShadowGraph& g, std::size_t length) {
  const std::size_t n = g.vertex_count();
  if (length >= n) return std::nullopt;
  std::vector<char> on_path(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = 1;
    if (extend_path(g, path, on_path, length)) return path;
    on_path[s] = 0;
  }
  return std::nullopt;
}

std::optional<std::size_t> longest_path(const ShadowGraph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comps.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(comps.size() - 1);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comps.back().push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
      }
    }
  }
  std::size_t best = 0;
  for (auto& c : comps) {
    if (c.size() > cap) return std::nullopt;
  }
  for (auto& c : comps) {
    if (c.size() <= best + 1) continue;
    std::sort(c.begin(), c.end());
    auto local = [&](Vertex x) {
      return static_cast<std::size_t>(std::lower_bound(c.begin(), c.end(), x) - c.begin());
    };
    std::function<void(Vertex, std::uint32_t, std::size_t)> dfs = [&](Vertex x, std::uint32_t used,
                                                                       std::size_t len) {
      best = std::max(best, len);
      if (best + 1 == c.size()) return;
      for (Vertex y : g.neighbors(x)) {
        const std::uint32_t bit = std::uint32_t{1} << local(y);
        if (used & bit) continue;
        dfs(y, used | bit, len + 1);
      }
    };
    for (Vertex x : c) dfs(x, std::uint32_t{1} << local(x), 0);
  }
  return best;
}

InequalityReport erdos_gallai_check(const ShadowGraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("path length must be positive");
  const std::size_t vprime = non_isolated(g).size();
  const Rational rhs = Rational(static_cast<long long>((k - 1) * vprime), 2);
  InequalityReport r = make_report(
      "erdos-gallai", "graph", Rational(g.edge_count()),
      "(" + std::to_string(k) + "-1)*" + std::to_string(vprime) + "/2", to_double(rhs), "<=",
      Rational(g.edge_count()) <= rhs);
  if (auto p = find_path(g, k)) {
    r.holds = true;
    r.note = "path of length " + std::to_string(k) + " present (" + path_string(*p) +
             "); bound not applicable";
  }
  return r;
}

std::vector<InequalityReport> verify_claim8(const Hypergraph3& h) {
  const ShadowGraph g = shadow(h);
  const auto vs = non_isolated(g);
  std::vector<InequalityReport> out(vs.size());
  parallel_for(vs.size(), [&](std::size_t i) {
    const Vertex v = vs[i];
    const ShadowGraph lv = link(h, v);
    const std::size_t nv = g.degree(v);
    InequalityReport r = make_report("8", vertex_subject(v), Rational(lv.edge_count()),
                                     "2*" + std::to_string(nv), static_cast<double>(2 * nv), "<=",
                                     lv.edge_count() <= 2 * nv);
    if (auto p = find_path(lv, 5)) {
      r.holds = false;
      r.note = "link contains the path " + path_string(*p);
    } else {
      r.note = "no path of length 5 in link";
    }
    out[i] = std::move(r);
  });
  return out;
}

std::vector<InequalityReport> verify_neighborhood_lemma(const Hypergraph3& h) {
  const ShadowGraph g = shadow(h);
  const auto vs = non_isolated(g);
  std::vector<InequalityReport> out(vs.size());
  parallel_for(vs.size(), [&](std::size_t i) {
    const Vertex v = vs[i];
    const std::size_t nv = g.degree(v);
    const std::size_t inside = neighborhood_edges(g, v);
    InequalityReport r = make_report("nbhd", vertex_subject(v), Rational(inside),
                                     "8*" + std::to_string(nv), static_cast<double>(8 * nv), "<",
                                     inside < 8 * nv);
    const ShadowGraph gv = graph_gv(h, g, v);
    r.note = "|G_v| = " + std::to_string(gv.edge_count());
    if (gv.edge_count() >= 6 * nv) {
      r.holds = false;
      r.note += " violates |G_v| < 6|N(v)|";
    }
    if (nv <= 20) {
      if (auto p = find_path(gv, 12)) {
        r.holds = false;
        r.note += "; G_v contains the path " + path_string(*p);
      } else {
        r.note += "; no path of length 12 in G_v";
      }
    } else {
      r.note += "; path check skipped (|N(v)| > 20)";
    }
    out[i] = std::move(r);
  });
  return out;
}

InequalityReport verify_lemma9(const Hypergraph3& h, Vertex v, const std::vector<Vertex>& m) {
  if (v >= h.vertex_count()) throw std::invalid_argument("vertex out of range");
  return lemma9_report(shadow(h), v, m);
}

std::vector<InequalityReport> verify_lemma9_all(const Hypergraph3& h) {
  const ShadowGraph g = shadow(h);
  const auto vs = non_isolated(g);
  std::vector<InequalityReport> out(vs.size());
  parallel_for(vs.size(), [&](std::size_t i) {
    const auto nb = g.neighbors(vs[i]);
    out[i] = lemma9_report(g, vs[i], std::vector<Vertex>(nb.begin(), nb.end()));
  });
  return out;
}

InequalityReport verify_claim12(const Hypergraph3& h) {
  const ShadowGraph g = shadow(h);
  const PathStats s = count_good_3paths(g);
  const std::size_t nn = g.vertex_count();
  const BigInt n = nn;
  const BigInt m = g.edge_count();
  const BigInt good = s.good3;
  // good >= 8m^3/n^2 - 2 C0 m sqrt(n)  <=>  8m^3 - good n^2 <= 2 C0 m n^2 sqrt(n)
  bool holds = true;
  double rhs_value = 0.0;
  if (nn > 0) {
    holds = le_times_sqrt(8 * m * m * m - good * n * n, 2 * PathConstants::C0 * m * n * n, n);
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(nn);
    rhs_value = static_cast<double>(nn) * avg * avg * avg -
                static_cast<double>(PathConstants::C0) * std::pow(static_cast<double>(nn), 1.5) * avg;
  }
  return make_report("12", "graph", Rational(good), "n*avg^3 - 5440*n^(3/2)*avg", rhs_value, ">=",
                     holds);
}

std::vector<InequalityReport> verify_claims13_14_15(const Hypergraph3& h, const Decomposition& d) {
  const ShadowGraph g = shadow(h);
  const std::size_t n = h.vertex_count();
  std::vector<InequalityReport> out(d.elements.size());
  parallel_for(d.elements.size(), [&](std::size_t i) {
    const DecompElement& el = d.elements[i];
    std::uint64_t count = 0;
    for (const VertexPair& e : el.shadow_edges()) count += good_3paths_from_edge(g, e.first, e.second);
    std::int64_t k = 0;
    std::int64_t c = 0;
    std::string claim;
    switch (el.kind) {
      case ElementKind::Triangle: k = 8, c = PathConstants::C1, claim = "13"; break;
      case ElementKind::Path2: k = 4, c = PathConstants::C2, claim = "14"; break;
      case ElementKind::K4: k = 6, c = PathConstants::C3, claim = "15"; break;
    }
    const BigInt excess = BigInt(count) - BigInt(k) * BigInt(n);
    const bool holds = le_times_sqrt(excess, BigInt(c), BigInt(n));
    const double rhs = static_cast<double>(k * static_cast<std::int64_t>(n)) +
                       static_cast<double>(c) * std::sqrt(static_cast<double>(n));
    out[i] = make_report(claim, "element " + std::to_string(i) + " (" + to_string(el.kind) + ")",
                         Rational(count),
                         std::to_string(k) + "*" + std::to_string(n) + " + " + sqrt_term(c, n), rhs,
                         "<=", holds);
  });
  return out;
}

InequalityReport claim10_report(const Hypergraph3& h) {
  const PeelResult p = peel(h, Rational(1, 3));
  const ShadowGraph g = shadow(p.hypergraph);
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const std::size_t n = g.vertex_count();
  const BigInt lhs = max_degree;
  const bool holds = lhs * lhs < BigInt(PathConstants::kMaxDegree * PathConstants::kMaxDegree) * n;
  InequalityReport r = make_report(
      "10", "peeled (n'=" + std::to_string(n) + ")", Rational(max_degree),
      sqrt_term(PathConstants::kMaxDegree, n),
      static_cast<double>(PathConstants::kMaxDegree) * std::sqrt(static_cast<double>(n)), "<", holds);
  r.asserted = false;
  r.note = "report only";
  return r;
}

}  // namespace berge5
