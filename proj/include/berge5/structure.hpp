#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge5/berge.hpp"
#include "berge5/hypergraph.hpp"

namespace berge5 {

enum class PairKind { Thin, Fat };

// Thin pairs have codegree 1, fat pairs codegree >= 2. Only pairs of the
// shadow are classified.
struct PairClass {
  std::map<VertexPair, PairKind> kind;
  std::size_t thin_count = 0;
  std::size_t fat_count = 0;

  bool is_thin(Vertex u, Vertex v) const;
  bool is_fat(Vertex u, Vertex v) const;
};

PairClass classify_pairs(const Hypergraph3& h);

// Hyperedges with at least two thin pairs.
std::vector<EdgeId> thin_hyperedges(const Hypergraph3& h);
std::size_t thin_pair_count(const Hypergraph3& h, EdgeId id);

// Maximal tightly connected set of hyperedges (ids ascending).
struct Block {
  std::vector<EdgeId> edges;
  bool operator==(const Block&) const = default;
};

// Components of the "share two vertices" relation, ordered by smallest id.
std::vector<Block> blocks(const Hypergraph3& h);

// Block minus its thin hyperedges (codegrees taken in the whole of H).
// Throws std::invalid_argument when `b` is not a block of `h`.
std::vector<EdgeId> core(const Hypergraph3& h, const Block& b);

enum class CoreShape { Empty, Crown, F1, F2, K43 };

std::string to_string(CoreShape shape);

struct CoreClass {
  CoreShape shape = CoreShape::Empty;
  std::vector<EdgeId> core_edges;
  // Crown: {a, b, c_1, ..., c_k} with ab the common pair (a < b) and the
  //        apexes ascending. An Empty core stores the block's own crown here.
  // F1:    {a, b, c, d} for the hyperedges abc, bcd, acd.
  // F2:    {o, a, b, c, d} for the hyperedges oab, obc, ocd, oda.
  // K43:   the four vertices, ascending.
  std::vector<Vertex> anchors;
  std::size_t crown_size = 0;  // Crown/Empty: number of crown hyperedges
};

// Raised when a core matches none of the admissible shapes. For C5-free
// input this cannot happen, so the payload carries a Berge-C5 of H when
// one exists.
class UnclassifiableCore : public std::runtime_error {
 public:
  UnclassifiableCore(const std::string& what, std::vector<EdgeId> block,
                     std::optional<BergeWitness> c5)
      : std::runtime_error(what), block_(std::move(block)), c5_(std::move(c5)) {}

  const std::vector<EdgeId>& block() const { return block_; }
  const std::optional<BergeWitness>& c5_witness() const { return c5_; }

 private:
  std::vector<EdgeId> block_;
  std::optional<BergeWitness> c5_;
};

// Tests the shapes in the order Empty, K43, F2, F1, Crown.
CoreClass classify_core(const Hypergraph3& h, const Block& b);

namespace detail {
// classify_core without the block membership check.
CoreClass classify_block(const Hypergraph3& h, const std::vector<EdgeId>& block);
}  // namespace detail

}  // namespace berge5
