#include "berge5/structure.hpp"

#include <algorithm>
#include <set>

#include "union_find.hpp"

namespace berge5 {

bool PairClass::is_thin(Vertex u, Vertex v) const {
  auto it = kind.find(make_pair_key(u, v));
  return it != kind.end() && it->second == PairKind::Thin;
}

bool PairClass::is_fat(Vertex u, Vertex v) const {
  auto it = kind.find(make_pair_key(u, v));
  return it != kind.end() && it->second == PairKind::Fat;
}

PairClass classify_pairs(const Hypergraph3& h) {
  PairClass pc;
  for (const auto& [pair, ids] : h.pair_index()) {
    const PairKind k = ids.size() == 1 ? PairKind::Thin : PairKind::Fat;
    pc.kind.emplace(pair, k);
    (k == PairKind::Thin ? pc.thin_count : pc.fat_count) += 1;
  }
  return pc;
}

std::size_t thin_pair_count(const Hypergraph3& h, EdgeId id) {
  const auto& [a, b, c] = h.edge(id);
  std::size_t thin = 0;
  thin += h.edges_with_pair(a, b).size() == 1;
  thin += h.edges_with_pair(a, c).size() == 1;
  thin += h.edges_with_pair(b, c).size() == 1;
  return thin;
}

std::vector<EdgeId> thin_hyperedges(const Hypergraph3& h) {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < h.edge_count(); ++id) {
    if (thin_pair_count(h, id) >= 2) out.push_back(id);
  }
  return out;
}

std::vector<Block> blocks(const Hypergraph3& h) {
  detail::UnionFind uf(h.edge_count());
  for (const auto& [pair, ids] : h.pair_index()) {
    for (std::size_t i = 1; i < ids.size(); ++i) uf.unite(ids[0], ids[i]);
  }
  std::vector<Block> out;
  std::vector<std::size_t> slot(h.edge_count(), static_cast<std::size_t>(-1));
  for (EdgeId id = 0; id < h.edge_count(); ++id) {
    const std::size_t root = uf.find(id);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].edges.push_back(id);
  }
  return out;
}

namespace {

void require_block(const Hypergraph3& h, const Block& b) {
  for (const Block& other : blocks(h)) {
    if (other == b) return;
  }
  throw std::invalid_argument("hyperedge set is not a block of the hypergraph");
}

std::vector<EdgeId> core_of(const Hypergraph3& h, const std::vector<EdgeId>& block) {
  std::vector<EdgeId> out;
  for (EdgeId id : block) {
    if (thin_pair_count(h, id) < 2) out.push_back(id);
  }
  return out;
}

std::vector<Vertex> vertices_of(const Hypergraph3& h, const std::vector<EdgeId>& ids) {
  std::vector<Vertex> vs;
  for (EdgeId id : ids) {
    for (Vertex v : h.edge(id)) vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Pair shared by every listed hyperedge: the smallest pair for a single
// hyperedge, the unique common pair otherwise.
std::optional<VertexPair> common_pair(const Hypergraph3& h, const std::vector<EdgeId>& ids) {
  if (ids.empty()) return std::nullopt;
  const Triple& t = h.edge(ids[0]);
  const VertexPair candidates[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
  for (const VertexPair& p : candidates) {
    bool all = true;
    for (EdgeId id : ids) {
      const Triple& s = h.edge(id);
      const bool has_a = std::find(s.begin(), s.end(), p.first) != s.end();
      const bool has_b = std::find(s.begin(), s.end(), p.second) != s.end();
      if (!has_a || !has_b) {
        all = false;
        break;
      }
    }
    if (all) return p;
  }
  return std::nullopt;
}

std::vector<Vertex> crown_anchors(const Hypergraph3& h, const std::vector<EdgeId>& ids,
                                  VertexPair ab) {
  std::vector<Vertex> anchors{ab.first, ab.second};
  std::vector<Vertex> apexes;
  for (EdgeId id : ids) {
    for (Vertex x : h.edge(id)) {
      if (x != ab.first && x != ab.second) apexes.push_back(x);
    }
  }
  std::sort(apexes.begin(), apexes.end());
  anchors.insert(anchors.end(), apexes.begin(), apexes.end());
  return anchors;
}

// Four hyperedges through a centre o whose link is a 4-cycle a-b-c-d-a.
std::optional<std::vector<Vertex>> match_f2(const Hypergraph3& h, const std::vector<EdgeId>& ids) {
  if (ids.size() != 4) return std::nullopt;
  const auto vs = vertices_of(h, ids);
  if (vs.size() != 5) return std::nullopt;
  for (Vertex o : vs) {
    std::map<Vertex, std::vector<Vertex>> adj;
    bool through_all = true;
    for (EdgeId id : ids) {
      const Triple& t = h.edge(id);
      if (std::find(t.begin(), t.end(), o) == t.end()) {
        through_all = false;
        break;
      }
      Vertex rest[2];
      int k = 0;
      for (Vertex x : t) {
        if (x != o) rest[k++] = x;
      }
      adj[rest[0]].push_back(rest[1]);
      adj[rest[1]].push_back(rest[0]);
    }
    if (!through_all || adj.size() != 4) continue;
    bool cycle = true;
    for (auto& [x, nb] : adj) {
      std::sort(nb.begin(), nb.end());
      if (nb.size() != 2 || nb[0] == nb[1]) cycle = false;
    }
    if (!cycle) continue;
    // 4 vertices, all of degree 2, 4 distinct link edges: a 4-cycle (two
    // disjoint 2-cycles would need repeated edges).
    const Vertex a = adj.begin()->first;
    const Vertex b = adj[a][0];
    const Vertex d = adj[a][1];
    const Vertex c = adj[b][0] == a ? adj[b][1] : adj[b][0];
    return std::vector<Vertex>{o, a, b, c, d};
  }
  return std::nullopt;
}

// Three hyperedges on four vertices, returned as {a, b, c, d} for
// abc, bcd, acd: c lies in all three, the remaining vertices ascend.
std::optional<std::vector<Vertex>> match_f1(const Hypergraph3& h, const std::vector<EdgeId>& ids) {
  if (ids.size() != 3) return std::nullopt;
  const auto vs = vertices_of(h, ids);
  if (vs.size() != 4) return std::nullopt;
  for (Vertex c : vs) {
    std::size_t count = 0;
    for (EdgeId id : ids) {
      const Triple& t = h.edge(id);
      count += std::find(t.begin(), t.end(), c) != t.end();
    }
    if (count != 3) continue;
    std::vector<Vertex> rest;
    for (Vertex x : vs) {
      if (x != c) rest.push_back(x);
    }
    return std::vector<Vertex>{rest[0], rest[1], c, rest[2]};
  }
  return std::nullopt;
}

[[noreturn]] void unclassifiable(const Hypergraph3& h, const std::vector<EdgeId>& block,
                                 const std::string& what) {
  throw UnclassifiableCore(what, block, contains_berge_cycle(h, 5));
}

}  // namespace

std::vector<EdgeId> core(const Hypergraph3& h, const Block& b) {
  require_block(h, b);
  return core_of(h, b.edges);
}

std::string to_string(CoreShape shape) {
  switch (shape) {
    case CoreShape::Empty: return "empty";
    case CoreShape::Crown: return "crown";
    case CoreShape::F1: return "F1";
    case CoreShape::F2: return "F2";
    case CoreShape::K43: return "K4^3";
  }
  return "?";
}

namespace detail {

CoreClass classify_block(const Hypergraph3& h, const std::vector<EdgeId>& block) {
  CoreClass cls;
  cls.core_edges = core_of(h, block);
  const auto& ids = cls.core_edges;

  if (ids.empty()) {
    cls.shape = CoreShape::Empty;
    auto ab = common_pair(h, block);
    if (!ab) unclassifiable(h, block, "block with empty core is not a crown");
    cls.anchors = crown_anchors(h, block, *ab);
    cls.crown_size = block.size();
    return cls;
  }
  const auto vs = vertices_of(h, ids);
  if (ids.size() == 4 && vs.size() == 4) {
    cls.shape = CoreShape::K43;
    cls.anchors = vs;
    return cls;
  }
  if (auto roles = match_f2(h, ids)) {
    cls.shape = CoreShape::F2;
    cls.anchors = std::move(*roles);
    return cls;
  }
  if (auto roles = match_f1(h, ids)) {
    cls.shape = CoreShape::F1;
    cls.anchors = std::move(*roles);
    return cls;
  }
  if (auto ab = common_pair(h, ids)) {
    cls.shape = CoreShape::Crown;
    cls.anchors = crown_anchors(h, ids, *ab);
    cls.crown_size = ids.size();
    return cls;
  }
  unclassifiable(h, block,
                 "core with " + std::to_string(ids.size()) + " hyperedges on " +
                     std::to_string(vs.size()) + " vertices matches no admissible shape");
}

}  // namespace detail

CoreClass classify_core(const Hypergraph3& h, const Block& b) {
  require_block(h, b);
  return detail::classify_block(h, b.edges);
}

}  // namespace berge5
