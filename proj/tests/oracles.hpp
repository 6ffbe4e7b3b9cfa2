#pragma once

// Reference implementations used only by the tests. They work from the raw
// triple list and dense adjacency matrices, never from the library's
// indexes, and favour obviousness over speed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "berge5/hypergraph.hpp"
#include "berge5/structure.hpp"

namespace oracle {

using berge5::Triple;
using berge5::Vertex;
using Matrix = std::vector<std::vector<bool>>;

inline bool in_triple(const Triple& t, Vertex v) { return t[0] == v || t[1] == v || t[2] == v; }

inline Matrix shadow_matrix(std::size_t n, const std::vector<Triple>& edges) {
  Matrix a(n, std::vector<bool>(n, false));
  for (const Triple& t : edges) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) a[t[i]][t[j]] = true;
      }
    }
  }
  return a;
}

inline Matrix graph_matrix(const berge5::ShadowGraph& g) {
  const std::size_t n = g.vertex_count();
  Matrix a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline std::size_t edge_count(const Matrix& a) {
  std::size_t m = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) m += a[u][v];
  }
  return m;
}

inline std::size_t codegree(const std::vector<Triple>& edges, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (const Triple& t : edges) c += in_triple(t, u) && in_triple(t, v);
  return c;
}

inline std::size_t shared_vertices(const Triple& a, const Triple& b) {
  std::size_t s = 0;
  for (Vertex x : a) s += in_triple(b, x);
  return s;
}

// Blocks as sets of triples: flood fill over "share exactly two vertices".
inline std::set<std::set<Triple>> blocks(const std::vector<Triple>& edges) {
  std::set<std::set<Triple>> out;
  std::vector<bool> done(edges.size(), false);
  for (std::size_t s = 0; s < edges.size(); ++s) {
    if (done[s]) continue;
    std::set<Triple> block;
    std::vector<std::size_t> stack{s};
    done[s] = true;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      block.insert(edges[i]);
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (!done[j] && shared_vertices(edges[i], edges[j]) == 2) {
          done[j] = true;
          stack.push_back(j);
        }
      }
    }
    out.insert(block);
  }
  return out;
}

// Ordered walks v0 v1 v2 v3 by enumeration of all 4-tuples.
inline std::uint64_t walks3(const Matrix& a) {
  const std::size_t n = a.size();
  std::uint64_t count = 0;
  for (std::size_t v0 = 0; v0 < n; ++v0)
    for (std::size_t v1 = 0; v1 < n; ++v1)
      if (a[v0][v1])
        for (std::size_t v2 = 0; v2 < n; ++v2)
          if (a[v1][v2])
            for (std::size_t v3 = 0; v3 < n; ++v3) count += a[v2][v3];
  return count;
}

// A 2-path x y z is bad when some triangle of the graph contains both of its
// edges. Scans every triangle.
inline bool good_2path(const Matrix& a, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t n = a.size();
  auto covers = [](const std::array<std::size_t, 3>& t, std::size_t p, std::size_t q) {
    const bool hp = t[0] == p || t[1] == p || t[2] == p;
    const bool hq = t[0] == q || t[1] == q || t[2] == q;
    return hp && hq;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r) {
        if (!a[p][q] || !a[q][r] || !a[p][r]) continue;
        const std::array<std::size_t, 3> t{p, q, r};
        if (covers(t, x, y) && covers(t, y, z)) return false;
      }
  return true;
}

// Ordered good 3-paths by recursive extension of paths vertex by vertex.
inline void extend(const Matrix& a, std::vector<std::size_t>& path, std::uint64_t& count) {
  if (path.size() == 4) {
    if (good_2path(a, path[0], path[1], path[2]) && good_2path(a, path[1], path[2], path[3])) ++count;
    return;
  }
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (!a[path.back()][w] || std::find(path.begin(), path.end(), w) != path.end()) continue;
    path.push_back(w);
    extend(a, path, count);
    path.pop_back();
  }
}

inline std::uint64_t good3(const Matrix& a) {
  std::uint64_t count = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    std::vector<std::size_t> path{s};
    extend(a, path, count);
  }
  return count;
}

inline std::uint64_t good3_from_edge(const Matrix& a, std::size_t u, std::size_t v) {
  std::uint64_t count = 0;
  for (const auto& [x0, x1] : {std::pair{u, v}, std::pair{v, u}}) {
    for (std::size_t x2 = 0; x2 < a.size(); ++x2) {
      if (!a[x1][x2] || x2 == x0) continue;
      for (std::size_t x3 = 0; x3 < a.size(); ++x3) {
        if (!a[x2][x3] || x3 == x0 || x3 == x1) continue;
        if (good_2path(a, x0, x1, x2) && good_2path(a, x1, x2, x3)) ++count;
      }
    }
  }
  return count;
}

// Longest path (edges) by trying every simple path; tiny graphs only.
inline std::size_t longest_path(const Matrix& a) {
  std::size_t best = 0;
  std::vector<std::size_t> path;
  std::vector<bool> used(a.size(), false);
  auto rec = [&](auto&& self) -> void {
    best = std::max(best, path.size() - 1);
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (used[w] || !a[path.back()][w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = false;
    }
  };
  for (std::size_t s = 0; s < a.size(); ++s) {
    used[s] = true;
    path = {s};
    rec(rec);
    used[s] = false;
  }
  return best;
}

// Independent shape test for a classified core.
inline bool valid_core_class(const berge5::Hypergraph3& h, const berge5::Block& block,
                             const berge5::CoreClass& c) {
  using berge5::CoreShape;
  std::vector<Triple> core;
  for (auto id : block.edges) {
    std::size_t thin = 0;
    const Triple& t = h.edge(id);
    thin += codegree(h.edges(), t[0], t[1]) == 1;
    thin += codegree(h.edges(), t[0], t[2]) == 1;
    thin += codegree(h.edges(), t[1], t[2]) == 1;
    if (thin < 2) core.push_back(t);
  }
  std::vector<Triple> claimed;
  for (auto id : c.core_edges) claimed.push_back(h.edge(id));
  if (claimed != core) return false;
  std::set<Vertex> vs;
  for (const Triple& t : core) vs.insert(t.begin(), t.end());
  auto has = [&](Vertex a, Vertex b, Vertex d) {
    Triple t{a, b, d};
    std::sort(t.begin(), t.end());
    return std::find(core.begin(), core.end(), t) != core.end();
  };
  auto crown_of = [&](const std::vector<Triple>& es) {
    if (c.anchors.size() != es.size() + 2) return false;
    const Vertex a = c.anchors[0];
    const Vertex b = c.anchors[1];
    for (std::size_t i = 2; i < c.anchors.size(); ++i) {
      Triple t{a, b, c.anchors[i]};
      std::sort(t.begin(), t.end());
      if (std::find(es.begin(), es.end(), t) == es.end()) return false;
    }
    return true;
  };
  switch (c.shape) {
    case CoreShape::Empty: {
      std::vector<Triple> all;
      for (auto id : block.edges) all.push_back(h.edge(id));
      return core.empty() && crown_of(all);
    }
    case CoreShape::Crown:
      return !core.empty() && crown_of(core);
    case CoreShape::K43:
      return core.size() == 4 && vs.size() == 4;
    case CoreShape::F1: {
      if (core.size() != 3 || vs.size() != 4 || c.anchors.size() != 4) return false;
      const auto& r = c.anchors;
      return has(r[0], r[1], r[2]) && has(r[1], r[3], r[2]) && has(r[0], r[2], r[3]);
    }
    case CoreShape::F2: {
      if (core.size() != 4 || vs.size() != 5 || c.anchors.size() != 5) return false;
      const auto& r = c.anchors;
      return has(r[0], r[1], r[2]) && has(r[0], r[2], r[3]) && has(r[0], r[3], r[4]) &&
             has(r[0], r[4], r[1]);
    }
  }
  return false;
}

// Uniformly random set of m distinct triples on n vertices (m capped).
inline berge5::Hypergraph3 random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Triple> all;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) all.push_back({a, b, c});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return berge5::Hypergraph3::build(n, all);
}

inline berge5::ShadowGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<berge5::VertexPair> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return berge5::ShadowGraph::from_edges(n, edges);
}

}  // namespace oracle
