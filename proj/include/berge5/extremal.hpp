#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge5/hypergraph.hpp"

namespace berge5 {

// Bipartite graph with parts A = {0..left-1} and B = {0..right-1}; an edge
// (a, b) joins a in A to b in B.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Duplicate edges are merged. Throws std::invalid_argument for
  // out-of-range endpoints.
  static BipartiteGraph make(std::size_t left, std::size_t right,
                             std::vector<std::pair<Vertex, Vertex>> edges);

  // Two-colours every component from its smallest vertex (colour A). Throws
  // std::invalid_argument if g has an odd cycle. `side_index`, when given,
  // receives (side, index within side) for each vertex of g.
  static BipartiteGraph from_graph(const ShadowGraph& g,
                                   std::vector<std::pair<int, Vertex>>* side_index = nullptr);

  std::size_t left_count() const { return left_; }
  std::size_t right_count() const { return right_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  // A on 0..left-1 followed by B on left..left+right-1.
  ShadowGraph as_graph() const;

  // Length of a shortest cycle, nullopt for a forest.
  std::optional<std::size_t> girth() const;
  bool is_c4_free() const;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // sorted
};

// Point-line incidence graph of PG(2, q): points on the A side, lines on the
// B side, both indexed by normalised vectors of F_q^3 (first non-zero
// coordinate 1) in lexicographic order. Girth 6 is checked before
// returning. Throws std::invalid_argument unless q is a prime <= 13.
BipartiteGraph incidence_c4free_bipartite(unsigned q);

// Every B-vertex b is split into the pair u1 = |A| + 2b, u2 = |A| + 2b + 1
// and every edge ab becomes the hyperedge {a, u1, u2}; A keeps its labels.
// Throws std::invalid_argument when g0 contains a 4-cycle.
Hypergraph3 bollobas_gyori(const BipartiteGraph& g0);

// Header comment describing the vertex layout used by bollobas_gyori.
std::string bollobas_gyori_layout(const BipartiteGraph& g0);

// Greedy maximal Berge-C5-free hypergraph: all triples on n vertices in a
// seeded random order, each kept iff no Berge-C5 passes through it.
// Deterministic per (n, seed) on every platform. Throws
// std::invalid_argument for n > 40.
Hypergraph3 random_c5free(std::size_t n, std::uint64_t seed);

struct SearchOptions {
  // Zero means no limit.
  std::chrono::milliseconds budget{0};
  // Seeds of random_c5free used for the initial lower bound.
  std::size_t greedy_seeds = 100;
};

struct SearchResult {
  std::size_t n = 0;
  std::size_t m = 0;  // ex_3(n, C5) when exact, otherwise a lower bound
  Hypergraph3 witness;
  bool exact = false;
  std::size_t lower_bound = 0;  // best greedy seed
  std::size_t subproblems = 0;  // independent subtrees after the shared prefix
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Branch and bound over the triples in lexicographic order (include before
// exclude). A candidate stays in play only while it closes no Berge-C5 with
// the current choice, and a node is cut when the choice plus all remaining
// candidates cannot beat the incumbent. Partial choices deciding the
// triples through vertex 0 are merged up to relabelling, then the surviving
// subtrees are solved independently in parallel. Node counts and the
// witness do not depend on the thread count. Exact results are available
// for n <= 7; n = 8 is accepted but may need the budget. Throws
// std::invalid_argument for n > 8.
SearchResult search_extremal(std::size_t n, const SearchOptions& options = {});

}  // namespace berge5
