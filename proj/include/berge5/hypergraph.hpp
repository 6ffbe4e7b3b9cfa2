#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "berge5/rational.hpp"

namespace berge5 {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Triple = std::array<Vertex, 3>;
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_key(Vertex u, Vertex v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Simple undirected graph on 0..n-1 with sorted adjacency lists. Used for
// the 2-shadow, vertex links and as the general graph type of the path
// counting code.
class ShadowGraph {
 public:
  ShadowGraph() = default;
  explicit ShadowGraph(std::size_t n) : adj_(n) {}

  // Duplicate pairs are merged. Throws std::invalid_argument on self-loops
  // or out-of-range endpoints.
  static ShadowGraph from_edges(std::size_t n, std::span<const VertexPair> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<VertexPair> edges() const;

  bool operator==(const ShadowGraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// Canonical 3-uniform hypergraph. Hyperedges are strictly increasing triples
// kept in lexicographic order; a hyperedge id is its position in that order.
class Hypergraph3 {
 public:
  using PairIndex = std::map<VertexPair, std::vector<EdgeId>>;

  Hypergraph3() = default;

  // Sorts every triple and removes duplicates. Throws std::invalid_argument
  // for out-of-range vertices or triples with a repeated vertex.
  static Hypergraph3 build(std::size_t n, std::span<const Triple> triples);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<Triple>& edges() const { return edges_; }
  const Triple& edge(EdgeId id) const { return edges_.at(id); }

  // Hyperedge ids containing v, ascending.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }
  // Hyperedge ids containing both u and v, ascending. Empty for u == v.
  std::span<const EdgeId> edges_with_pair(Vertex u, Vertex v) const;
  const PairIndex& pair_index() const { return pair_index_; }

  std::optional<EdgeId> find_edge(Triple t) const;

  // Sub-hypergraph on the same vertex set keeping only the listed ids.
  Hypergraph3 restricted_to(std::span<const EdgeId> ids) const;
  Hypergraph3 with_edge(Triple t) const;

  bool operator==(const Hypergraph3& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  PairIndex pair_index_;
};

// Rebuilds the pair index from the edge list and compares it against the
// stored one.
bool pair_index_consistent(const Hypergraph3& h);

ShadowGraph shadow(const Hypergraph3& h);

// Throws std::invalid_argument when u == v.
std::size_t codeg(const Hypergraph3& h, Vertex u, Vertex v);

// L_v: edges uw with uvw a hyperedge, on 0..n-1 with v isolated.
ShadowGraph link(const Hypergraph3& h, Vertex v);

// Vertices sharing a hyperedge with v (equals the shadow neighbourhood).
std::vector<Vertex> neighborhood(const Hypergraph3& h, Vertex v);

struct DegreeReport {
  std::vector<std::size_t> degree;         // d(v)
  std::vector<std::size_t> shadow_degree;  // d_G(v)
  Rational average_degree;                 // 3|H| / n
  Rational average_shadow_degree;          // 2|G| / n
  // Sandwich d_G(v)/2 <= d(v) <= 2 d_G(v), per vertex. The left side always
  // holds; the right side is a theorem only for C5-free input.
  std::vector<bool> lower_holds;
  std::vector<bool> upper_holds;
};

DegreeReport degrees(const Hypergraph3& h);

struct PeelResult {
  Hypergraph3 hypergraph;          // relabelled onto 0..k-1
  std::vector<Vertex> original;    // original[i] = input id of vertex i
};

// Repeatedly deletes the smallest-id vertex whose degree is below
// ratio * (current average degree), together with its hyperedges. The
// average is recomputed after every deletion. Throws std::invalid_argument
// unless ratio > 0.
PeelResult peel(const Hypergraph3& h, const Rational& ratio);

}  // namespace berge5
