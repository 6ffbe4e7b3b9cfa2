#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "berge5/hypergraph.hpp"

namespace berge5 {

// Small pattern graph F on vertices 0..k-1. Parallel edges are allowed so
// that the 2-cycle (two edges between the same pair) can be expressed;
// loops are not.
struct PatternGraph {
  static constexpr std::size_t kMaxVertices = 12;

  std::size_t k = 0;
  std::vector<VertexPair> edges;  // normalised (u < v)
  std::string name;

  // Throws std::invalid_argument on loops, out-of-range endpoints or k > 12.
  static PatternGraph make(std::size_t k, std::vector<VertexPair> edges, std::string name = {});

  static PatternGraph cycle(std::size_t length);     // C_k, k >= 2
  static PatternGraph path(std::size_t length);      // P_k: k edges, k + 1 vertices
  static PatternGraph complete(std::size_t k);       // K_k

  // "c2".."c12", "k2".."k5", "path:<k>"; throws std::invalid_argument.
  static PatternGraph parse(const std::string& spec);

  std::vector<std::size_t> degrees() const;
};

// vmap[i] is the image of pattern vertex i; emap[j] is the hyperedge
// assigned to pattern edge j.
struct BergeWitness {
  std::vector<Vertex> vmap;
  std::vector<EdgeId> emap;

  bool operator==(const BergeWitness&) const = default;
};

// Checks injectivity of both maps and that every pattern edge lies inside
// its hyperedge.
bool is_valid_witness(const Hypergraph3& h, const PatternGraph& f, const BergeWitness& w);

// Embeds the pattern vertices (highest pattern degree first, candidates
// filtered by degree) and assigns pattern edges to distinct hyperedges by
// maximum bipartite matching.
std::optional<BergeWitness> contains_berge(const Hypergraph3& h, const PatternGraph& f);

// Direct backtracking over alternating vertex/hyperedge sequences. The
// witness is expressed against PatternGraph::cycle(k). Throws
// std::invalid_argument for k < 2.
std::optional<BergeWitness> contains_berge_cycle(const Hypergraph3& h, std::size_t k);

bool is_c5_free(const Hypergraph3& h);
bool is_linear(const Hypergraph3& h);
// Smallest k >= 2 with a Berge-C_k, or nullopt when there is none.
std::optional<std::size_t> berge_girth(const Hypergraph3& h);

// Exhaustive reference decision procedure: every injection of the pattern
// vertices and every assignment of pattern edges to distinct hyperedges,
// with no matching and no degree pruning. Limited to |H| <= 12 and k <= 6;
// throws std::invalid_argument beyond that.
std::optional<BergeWitness> oracle_contains_berge(const Hypergraph3& h, const PatternGraph& f);

// Hypergraph under construction, one hyperedge at a time, with the same
// lookup surface as Hypergraph3. Used by the generators and the exhaustive
// search to test only the cycles through a newly added hyperedge.
class IncrementalHypergraph {
 public:
  explicit IncrementalHypergraph(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Triple& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<Triple>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  std::span<const EdgeId> edges_with_pair(Vertex u, Vertex v) const {
    return pairs_[u * n_ + v];
  }

  // The triple must be sorted, in range and not already present.
  EdgeId push(const Triple& t);
  void pop();

  // A Berge-C_k that uses hyperedge `id`, if any (witness against
  // PatternGraph::cycle(k)).
  std::optional<BergeWitness> cycle_through(EdgeId id, std::size_t k) const;

  Hypergraph3 to_hypergraph() const;

 private:
  std::size_t n_;
  std::vector<Triple> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<EdgeId>> pairs_;
};

}  // namespace berge5
