#include "berge5/decompose.hpp"

#include <algorithm>

#include "berge5/parallel.hpp"
#include "berge5/structure.hpp"

namespace berge5 {

std::string to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Path2: return "path2";
    case ElementKind::Triangle: return "triangle";
    case ElementKind::K4: return "K4";
  }
  return "?";
}

std::vector<VertexPair> DecompElement::shadow_edges() const {
  const auto& v = vertices;
  switch (kind) {
    case ElementKind::Path2:
      return {make_pair_key(v[0], v[1]), make_pair_key(v[1], v[2])};
    case ElementKind::Triangle:
      return {make_pair_key(v[0], v[1]), make_pair_key(v[1], v[2]), make_pair_key(v[0], v[2])};
    case ElementKind::K4: {
      std::vector<VertexPair> out;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) out.push_back(make_pair_key(v[i], v[j]));
      }
      return out;
    }
  }
  return {};
}

namespace {

class BlockDecomposer {
 public:
  BlockDecomposer(const Hypergraph3& h, std::size_t block_id, std::vector<DecompElement>& out)
      : h_(h), block_(block_id), out_(out) {}

  void run(const std::vector<EdgeId>& block) {
    const CoreClass cls = detail::classify_block(h_, block);
    if (cls.shape == CoreShape::Empty) {
      crown(cls.anchors);
      return;
    }
    const std::vector<EdgeId>& core = cls.core_edges;
    for (EdgeId id : block) {
      if (std::binary_search(core.begin(), core.end(), id)) continue;
      thin_path(id);
    }
    const auto& r = cls.anchors;
    switch (cls.shape) {
      case CoreShape::Crown:
        crown(r);
        break;
      case CoreShape::F1:  // a b c d  ->  abc, bdc, cad
        path(r[0], r[1], r[2]);
        path(r[1], r[3], r[2]);
        path(r[2], r[0], r[3]);
        break;
      case CoreShape::F2:  // o a b c d  ->  abo, bco, cdo, dao
        path(r[1], r[2], r[0]);
        path(r[2], r[3], r[0]);
        path(r[3], r[4], r[0]);
        path(r[4], r[1], r[0]);
        break;
      case CoreShape::K43:
        out_.push_back({ElementKind::K4, r, block_, core});
        break;
      case CoreShape::Empty:
        break;
    }
  }

 private:
  EdgeId lookup(Vertex a, Vertex b, Vertex c) const {
    auto id = h_.find_edge({a, b, c});
    if (!id) {
      throw DecompositionError("decomposition element has no backing hyperedge",
                               contains_berge_cycle(h_, 5));
    }
    return *id;
  }

  void path(Vertex a, Vertex mid, Vertex c) {
    out_.push_back({ElementKind::Path2, {a, mid, c}, block_, {lookup(a, mid, c)}});
  }

  // anchors = {a, b, c_1, ..., c_k}: triangle abc_1 and paths a c_i b.
  void crown(const std::vector<Vertex>& anchors) {
    const Vertex a = anchors[0];
    const Vertex b = anchors[1];
    out_.push_back({ElementKind::Triangle, {a, b, anchors[2]}, block_, {lookup(a, b, anchors[2])}});
    for (std::size_t i = 3; i < anchors.size(); ++i) path(a, anchors[i], b);
  }

  // A thin hyperedge outside a non-empty core has exactly two thin pairs;
  // they meet in the middle vertex of its 2-path.
  void thin_path(EdgeId id) {
    const Triple& t = h_.edge(id);
    std::vector<VertexPair> thin;
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : kPairs) {
      if (h_.edges_with_pair(t[pr[0]], t[pr[1]]).size() == 1) thin.emplace_back(t[pr[0]], t[pr[1]]);
    }
    if (thin.size() != 2) {
      throw DecompositionError("thin hyperedge outside the core does not have exactly two thin pairs",
                               contains_berge_cycle(h_, 5));
    }
    Vertex mid = thin[0].first;
    if (mid != thin[1].first && mid != thin[1].second) mid = thin[0].second;
    const Vertex x = thin[0].first == mid ? thin[0].second : thin[0].first;
    const Vertex z = thin[1].first == mid ? thin[1].second : thin[1].first;
    out_.push_back({ElementKind::Path2, {std::min(x, z), mid, std::max(x, z)}, block_, {id}});
  }

  const Hypergraph3& h_;
  std::size_t block_;
  std::vector<DecompElement>& out_;
};

}  // namespace

Decomposition decompose(const Hypergraph3& h) {
  const auto bs = blocks(h);
  std::vector<std::vector<DecompElement>> per_block(bs.size());
  try {
    parallel_for(bs.size(), [&](std::size_t i) {
      BlockDecomposer(h, i, per_block[i]).run(bs[i].edges);
    });
  } catch (const UnclassifiableCore& e) {
    throw DecompositionError(e.what(), e.c5_witness());
  }

  Decomposition d;
  for (auto& part : per_block) {
    for (auto& el : part) d.elements.push_back(std::move(el));
  }
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    for (const VertexPair& e : d.elements[i].shadow_edges()) {
      if (!d.edge_owner.emplace(e, i).second) {
        throw DecompositionError("shadow edge " + std::to_string(e.first) + "-" +
                                     std::to_string(e.second) + " covered twice",
                                 contains_berge_cycle(h, 5));
      }
    }
  }
  if (d.edge_owner.size() != h.pair_index().size()) {
    throw DecompositionError("decomposition does not cover every shadow edge",
                             contains_berge_cycle(h, 5));
  }
  return d;
}

AlphaStats alpha_stats(const Decomposition& d, const ShadowGraph& g) {
  AlphaStats s;
  for (const auto& el : d.elements) {
    switch (el.kind) {
      case ElementKind::Path2: ++s.paths; break;
      case ElementKind::Triangle: ++s.triangles; break;
      case ElementKind::K4: ++s.k4s; break;
    }
  }
  s.shadow_edges = g.edge_count();
  if (s.shadow_edges > 0) {
    s.alpha1 = Rational(3 * s.triangles, s.shadow_edges);
    s.alpha2 = Rational(2 * s.paths, s.shadow_edges);
  }
  s.alpha_k4 = Rational(1) - s.alpha1 - s.alpha2;
  return s;
}

Claim6Report verify_claim6(const Hypergraph3& h, const Decomposition& d) {
  const ShadowGraph g = shadow(h);
  const AlphaStats s = alpha_stats(d, g);
  Claim6Report r;
  r.hyperedges = Rational(h.edge_count());
  r.predicted = (s.alpha1 / 3 + s.alpha2 / 2 + Rational(2) * s.alpha_k4 / 3) *
                Rational(g.edge_count());
  r.holds = r.hyperedges == r.predicted;
  return r;
}

Observation7Report verify_observation7(const Hypergraph3& h, const Decomposition& d) {
  Observation7Report r;
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    const auto& el = d.elements[i];
    const auto& v = el.vertices;
    switch (el.kind) {
      case ElementKind::Triangle:
        if (!h.find_edge({v[0], v[1], v[2]})) r.violations.push_back({i, "triangle is not a hyperedge"});
        break;
      case ElementKind::Path2:
        if (!h.find_edge({v[0], v[1], v[2]})) {
          r.violations.push_back({i, "2-path is not a hyperedge"});
        } else if (h.edges_with_pair(v[0], v[2]).size() < 2) {
          r.violations.push_back({i, "2-path endpoints form a thin pair"});
        }
        break;
      case ElementKind::K4: {
        const Triple triples[4] = {
            {v[0], v[1], v[2]}, {v[0], v[1], v[3]}, {v[0], v[2], v[3]}, {v[1], v[2], v[3]}};
        for (const Triple& t : triples) {
          if (!h.find_edge(t)) {
            r.violations.push_back({i, "K4 is missing a triple of K4^3"});
            break;
          }
        }
        break;
      }
    }
  }
  return r;
}

}  // namespace berge5
