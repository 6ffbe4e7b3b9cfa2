#include "berge5/berge.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "cycle_search.hpp"

namespace berge5 {

PatternGraph PatternGraph::make(std::size_t k, std::vector<VertexPair> edges, std::string name) {
  if (k > kMaxVertices) {
    throw std::invalid_argument("pattern graphs are limited to " + std::to_string(kMaxVertices) +
                                " vertices");
  }
  for (auto& e : edges) {
    if (e.first >= k || e.second >= k) throw std::invalid_argument("pattern edge out of range");
    if (e.first == e.second) throw std::invalid_argument("pattern edge is a loop");
    e = make_pair_key(e.first, e.second);
  }
  PatternGraph f;
  f.k = k;
  f.edges = std::move(edges);
  f.name = std::move(name);
  return f;
}

PatternGraph PatternGraph::cycle(std::size_t length) {
  if (length < 2) throw std::invalid_argument("cycle length must be at least 2");
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length));
  }
  return make(length, std::move(edges), "C" + std::to_string(length));
}

PatternGraph PatternGraph::path(std::size_t length) {
  std::vector<VertexPair> edges;
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return make(length + 1, std::move(edges), "P" + std::to_string(length));
}

PatternGraph PatternGraph::complete(std::size_t k) {
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return make(k, std::move(edges), "K" + std::to_string(k));
}

PatternGraph PatternGraph::parse(const std::string& spec) {
  auto number = [&](const std::string& digits) -> std::size_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad pattern '" + spec + "'");
    }
    return std::stoul(digits);
  };
  std::string s = spec;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.rfind("path:", 0) == 0) return path(number(s.substr(5)));
  if (s.size() >= 2 && s[0] == 'c') return cycle(number(s.substr(1)));
  if (s.size() >= 2 && s[0] == 'k') return complete(number(s.substr(1)));
  throw std::invalid_argument("bad pattern '" + spec + "'");
}

std::vector<std::size_t> PatternGraph::degrees() const {
  std::vector<std::size_t> deg(k, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool is_valid_witness(const Hypergraph3& h, const PatternGraph& f, const BergeWitness& w) {
  if (w.vmap.size() != f.k || w.emap.size() != f.edges.size()) return false;
  std::vector<Vertex> vs = w.vmap;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  for (Vertex v : vs) {
    if (v >= h.vertex_count()) return false;
  }
  std::vector<EdgeId> es = w.emap;
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t j = 0; j < f.edges.size(); ++j) {
    if (w.emap[j] >= h.edge_count()) return false;
    const Triple& t = h.edge(w.emap[j]);
    const Vertex a = w.vmap[f.edges[j].first];
    const Vertex b = w.vmap[f.edges[j].second];
    const bool has_a = std::find(t.begin(), t.end(), a) != t.end();
    const bool has_b = std::find(t.begin(), t.end(), b) != t.end();
    if (!has_a || !has_b) return false;
  }
  return true;
}

namespace {

// Kuhn's augmenting-path matching of pattern edges onto hyperedges.
class EdgeMatcher {
 public:
  EdgeMatcher(const Hypergraph3& h, const PatternGraph& f, const std::vector<Vertex>& vmap)
      : h_(h), f_(f), vmap_(vmap), owner_(h.edge_count(), kFree), match_(f.edges.size(), kFree) {}

  std::optional<std::vector<EdgeId>> solve() {
    for (std::size_t j = 0; j < f_.edges.size(); ++j) {
      seen_.assign(h_.edge_count(), false);
      if (!augment(j)) return std::nullopt;
    }
    std::vector<EdgeId> emap(match_.begin(), match_.end());
    return emap;
  }

 private:
  static constexpr EdgeId kFree = static_cast<EdgeId>(-1);

  bool augment(std::size_t j) {
    const auto& [u, v] = f_.edges[j];
    for (EdgeId id : h_.edges_with_pair(vmap_[u], vmap_[v])) {
      if (seen_[id]) continue;
      seen_[id] = true;
      if (owner_[id] == kFree || augment(owner_[id])) {
        owner_[id] = static_cast<EdgeId>(j);
        match_[j] = id;
        return true;
      }
    }
    return false;
  }

  const Hypergraph3& h_;
  const PatternGraph& f_;
  const std::vector<Vertex>& vmap_;
  std::vector<EdgeId> owner_;
  std::vector<EdgeId> match_;
  std::vector<bool> seen_;
};

class Embedder {
 public:
  Embedder(const Hypergraph3& h, const PatternGraph& f) : h_(h), f_(f), g_(shadow(h)) {
    const auto pdeg = f.degrees();
    order_.resize(f.k);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return pdeg[a] > pdeg[b]; });

    // multiplicity[a][b]: number of parallel pattern edges between a and b.
    multiplicity_.assign(f.k, std::vector<std::size_t>(f.k, 0));
    for (const auto& [a, b] : f.edges) {
      ++multiplicity_[a][b];
      ++multiplicity_[b][a];
    }
    // A pattern vertex with p incident edges and q distinct neighbours needs
    // an image lying in p distinct hyperedges and having q distinct shadow
    // neighbours.
    candidates_.resize(f.k);
    for (Vertex p = 0; p < f.k; ++p) {
      std::size_t distinct = 0;
      for (Vertex q = 0; q < f.k; ++q) distinct += multiplicity_[p][q] > 0 ? 1 : 0;
      for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (h.incident(v).size() >= pdeg[p] && g_.degree(v) >= distinct) {
          candidates_[p].push_back(v);
        }
      }
    }
    vmap_.assign(f.k, 0);
    taken_.assign(h.vertex_count(), false);
  }

  std::optional<BergeWitness> run() {
    if (f_.k > h_.vertex_count() || f_.edges.size() > h_.edge_count()) return std::nullopt;
    if (place(0)) return result_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t depth) {
    if (depth == order_.size()) {
      EdgeMatcher matcher(h_, f_, vmap_);
      if (auto emap = matcher.solve()) {
        result_ = BergeWitness{vmap_, std::move(*emap)};
        return true;
      }
      return false;
    }
    const Vertex p = order_[depth];
    for (Vertex v : candidates_[p]) {
      if (taken_[v] || !compatible(depth, p, v)) continue;
      taken_[v] = true;
      vmap_[p] = v;
      if (place(depth + 1)) return true;
      taken_[v] = false;
    }
    return false;
  }

  // Every already-placed neighbour q must share at least mult(p, q)
  // hyperedges with the image.
  bool compatible(std::size_t depth, Vertex p, Vertex v) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex q = order_[i];
      const std::size_t need = multiplicity_[p][q];
      if (need > 0 && h_.edges_with_pair(v, vmap_[q]).size() < need) return false;
    }
    return true;
  }

  const Hypergraph3& h_;
  const PatternGraph& f_;
  ShadowGraph g_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> multiplicity_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> vmap_;
  std::vector<bool> taken_;
  BergeWitness result_;
};

template <typename Graph>
std::optional<BergeWitness> cycle_through_edge(const Graph& h, EdgeId id, std::size_t k) {
  const Triple& t = h.edge(id);
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    detail::CycleSearch<Graph> search{h, {t[pr[0]]}, {id}, t[pr[1]]};
    if (search.run(k - 2)) {
      BergeWitness w;
      w.vmap = search.verts;
      w.vmap.push_back(t[pr[1]]);
      w.emap.assign(search.used.begin() + 1, search.used.end());
      w.emap.push_back(id);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BergeWitness> contains_berge(const Hypergraph3& h, const PatternGraph& f) {
  return Embedder(h, f).run();
}

std::optional<BergeWitness> contains_berge_cycle(const Hypergraph3& h, std::size_t k) {
  if (k < 2) throw std::invalid_argument("Berge cycle length must be at least 2");
  if (k > h.vertex_count() || k > h.edge_count()) return std::nullopt;
  // The first vertex is the smallest one on the cycle.
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.incident(v).size() < 2) continue;
    detail::CycleSearch<Hypergraph3> search{h, {v}, {}, v, v, true};
    if (search.run(k - 1)) return BergeWitness{search.verts, search.used};
  }
  return std::nullopt;
}

bool is_c5_free(const Hypergraph3& h) { return !contains_berge_cycle(h, 5); }

bool is_linear(const Hypergraph3& h) {
  for (const auto& [pair, ids] : h.pair_index()) {
    if (ids.size() > 1) return false;
  }
  return true;
}

std::optional<std::size_t> berge_girth(const Hypergraph3& h) {
  const std::size_t limit = std::min(h.vertex_count(), h.edge_count());
  for (std::size_t k = 2; k <= limit; ++k) {
    if (contains_berge_cycle(h, k)) return k;
  }
  return std::nullopt;
}

std::optional<BergeWitness> oracle_contains_berge(const Hypergraph3& h, const PatternGraph& f) {
  if (h.edge_count() > 12 || f.k > 6) {
    throw std::invalid_argument("oracle limited to |H| <= 12 and k <= 6");
  }
  const std::size_t n = h.vertex_count();
  const std::size_t m = f.edges.size();
  if (f.k > n) return std::nullopt;

  std::vector<Vertex> vmap(f.k);
  std::vector<bool> vtaken(n, false);
  std::vector<EdgeId> emap(m);
  std::vector<bool> etaken(h.edge_count(), false);
  auto contains = [&](EdgeId id, Vertex a) {
    const Triple& t = h.edge(id);
    return t[0] == a || t[1] == a || t[2] == a;
  };

  auto assign_edges = [&](auto&& self, std::size_t j) -> bool {
    if (j == m) return true;
    const Vertex a = vmap[f.edges[j].first];
    const Vertex b = vmap[f.edges[j].second];
    for (EdgeId id = 0; id < h.edge_count(); ++id) {
      if (etaken[id] || !contains(id, a) || !contains(id, b)) continue;
      etaken[id] = true;
      emap[j] = id;
      if (self(self, j + 1)) return true;
      etaken[id] = false;
    }
    return false;
  };
  auto assign_vertices = [&](auto&& self, std::size_t i) -> bool {
    if (i == f.k) return assign_edges(assign_edges, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (vtaken[v]) continue;
      vtaken[v] = true;
      vmap[i] = v;
      if (self(self, i + 1)) return true;
      vtaken[v] = false;
    }
    return false;
  };
  if (assign_vertices(assign_vertices, 0)) return BergeWitness{vmap, emap};
  return std::nullopt;
}

IncrementalHypergraph::IncrementalHypergraph(std::size_t n)
    : n_(n), incidence_(n), pairs_(n * n) {}

EdgeId IncrementalHypergraph::push(const Triple& t) {
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(t);
  for (Vertex v : t) incidence_[v].push_back(id);
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    pairs_[t[pr[0]] * n_ + t[pr[1]]].push_back(id);
    pairs_[t[pr[1]] * n_ + t[pr[0]]].push_back(id);
  }
  return id;
}

void IncrementalHypergraph::pop() {
  const Triple t = edges_.back();
  edges_.pop_back();
  for (Vertex v : t) incidence_[v].pop_back();
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    pairs_[t[pr[0]] * n_ + t[pr[1]]].pop_back();
    pairs_[t[pr[1]] * n_ + t[pr[0]]].pop_back();
  }
}

std::optional<BergeWitness> IncrementalHypergraph::cycle_through(EdgeId id, std::size_t k) const {
  if (k < 2) throw std::invalid_argument("Berge cycle length must be at least 2");
  return cycle_through_edge(*this, id, k);
}

Hypergraph3 IncrementalHypergraph::to_hypergraph() const { return Hypergraph3::build(n_, edges_); }

}  // namespace berge5
