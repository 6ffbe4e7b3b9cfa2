#include "berge5/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace berge5 {

ShadowGraph ShadowGraph::from_edges(std::size_t n, std::span<const VertexPair> edges) {
  ShadowGraph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("graph edge endpoint out of range: " + std::to_string(u) +
                                  "-" + std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  g.m_ = total / 2;
  return g;
}

bool ShadowGraph::adjacent(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexPair> ShadowGraph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

Hypergraph3::PairIndex index_pairs(const std::vector<Triple>& edges) {
  Hypergraph3::PairIndex index;
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const auto& [a, b, c] = edges[id];
    index[{a, b}].push_back(id);
    index[{a, c}].push_back(id);
    index[{b, c}].push_back(id);
  }
  return index;
}

}  // namespace

Hypergraph3 Hypergraph3::build(std::size_t n, std::span<const Triple> triples) {
  Hypergraph3 h;
  h.n_ = n;
  h.edges_.reserve(triples.size());
  for (Triple t : triples) {
    for (Vertex v : t) {
      if (v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n = " +
                                    std::to_string(n));
      }
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw std::invalid_argument("hyperedge repeats vertex " + std::to_string(t[1]));
    }
    h.edges_.push_back(t);
  }
  std::sort(h.edges_.begin(), h.edges_.end());
  h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());

  h.incidence_.assign(n, {});
  for (EdgeId id = 0; id < h.edges_.size(); ++id) {
    for (Vertex v : h.edges_[id]) h.incidence_[v].push_back(id);
  }
  h.pair_index_ = index_pairs(h.edges_);
  return h;
}

std::span<const EdgeId> Hypergraph3::edges_with_pair(Vertex u, Vertex v) const {
  if (u == v) return {};
  auto it = pair_index_.find(make_pair_key(u, v));
  if (it == pair_index_.end()) return {};
  return it->second;
}

std::optional<EdgeId> Hypergraph3::find_edge(Triple t) const {
  std::sort(t.begin(), t.end());
  auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (it == edges_.end() || *it != t) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Hypergraph3 Hypergraph3::restricted_to(std::span<const EdgeId> ids) const {
  std::vector<Triple> kept;
  kept.reserve(ids.size());
  for (EdgeId id : ids) kept.push_back(edges_.at(id));
  return build(n_, kept);
}

Hypergraph3 Hypergraph3::with_edge(Triple t) const {
  std::vector<Triple> all = edges_;
  all.push_back(t);
  return build(n_, all);
}

bool pair_index_consistent(const Hypergraph3& h) {
  return index_pairs(h.edges()) == h.pair_index();
}

ShadowGraph shadow(const Hypergraph3& h) {
  std::vector<VertexPair> pairs;
  pairs.reserve(h.pair_index().size());
  for (const auto& [pair, ids] : h.pair_index()) pairs.push_back(pair);
  return ShadowGraph::from_edges(h.vertex_count(), pairs);
}

std::size_t codeg(const Hypergraph3& h, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("codegree of a vertex with itself");
  return h.edges_with_pair(u, v).size();
}

ShadowGraph link(const Hypergraph3& h, Vertex v) {
  std::vector<VertexPair> pairs;
  for (EdgeId id : h.incident(v)) {
    const Triple& t = h.edge(id);
    Vertex other[2];
    int k = 0;
    for (Vertex x : t) {
      if (x != v) other[k++] = x;
    }
    pairs.emplace_back(other[0], other[1]);
  }
  return ShadowGraph::from_edges(h.vertex_count(), pairs);
}

std::vector<Vertex> neighborhood(const Hypergraph3& h, Vertex v) {
  std::vector<Vertex> out;
  for (EdgeId id : h.incident(v)) {
    for (Vertex x : h.edge(id)) {
      if (x != v) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DegreeReport degrees(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  const ShadowGraph g = shadow(h);
  DegreeReport r;
  r.degree.resize(n);
  r.shadow_degree.resize(n);
  r.lower_holds.resize(n);
  r.upper_holds.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = h.incident(v).size();
    const std::size_t dg = g.degree(v);
    r.degree[v] = d;
    r.shadow_degree[v] = dg;
    r.lower_holds[v] = dg <= 2 * d;
    r.upper_holds[v] = d <= 2 * dg;
  }
  if (n > 0) {
    r.average_degree = Rational(3 * h.edge_count(), n);
    r.average_shadow_degree = Rational(2 * g.edge_count(), n);
  }
  return r;
}

PeelResult peel(const Hypergraph3& h, const Rational& ratio) {
  if (ratio <= 0) throw std::invalid_argument("peel ratio must be positive");
  const std::size_t n = h.vertex_count();
  std::vector<bool> alive_vertex(n, true);
  std::vector<bool> alive_edge(h.edge_count(), true);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = h.incident(v).size();
  std::size_t live_vertices = n;
  std::size_t live_edges = h.edge_count();

  for (;;) {
    if (live_vertices == 0) break;
    // d(v) < ratio * 3|H| / n'  <=>  d(v) * n' < ratio * 3|H|
    const Rational threshold = ratio * Rational(3 * live_edges);
    std::optional<Vertex> victim;
    for (Vertex v = 0; v < n; ++v) {
      if (alive_vertex[v] && Rational(deg[v] * live_vertices) < threshold) {
        victim = v;
        break;
      }
    }
    if (!victim) break;
    alive_vertex[*victim] = false;
    --live_vertices;
    for (EdgeId id : h.incident(*victim)) {
      if (!alive_edge[id]) continue;
      alive_edge[id] = false;
      --live_edges;
      for (Vertex x : h.edge(id)) --deg[x];
    }
  }

  PeelResult out;
  std::vector<Vertex> relabel(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive_vertex[v]) continue;
    relabel[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Triple> kept;
  for (EdgeId id = 0; id < h.edge_count(); ++id) {
    if (!alive_edge[id]) continue;
    const Triple& t = h.edge(id);
    kept.push_back({relabel[t[0]], relabel[t[1]], relabel[t[2]]});
  }
  out.hypergraph = Hypergraph3::build(out.original.size(), kept);
  return out;
}

}  // namespace berge5
