#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge5/berge.hpp"
#include "berge5/hypergraph.hpp"
#include "berge5/rational.hpp"

namespace berge5 {

enum class ElementKind { Path2, Triangle, K4 };

std::string to_string(ElementKind kind);

// One piece of the shadow edge decomposition.
//   Path2:    vertices {a, b, c}, edges ab and bc (b is the middle vertex)
//   Triangle: vertices {a, b, c}, edges ab, bc, ca
//   K4:       vertices {a, b, c, d}, all six pairs
struct DecompElement {
  ElementKind kind = ElementKind::Path2;
  std::vector<Vertex> vertices;
  std::size_t block = 0;           // index into blocks(H)
  std::vector<EdgeId> provenance;  // hyperedges backing the element

  std::vector<VertexPair> shadow_edges() const;
  bool operator==(const DecompElement&) const = default;
};

struct Decomposition {
  std::vector<DecompElement> elements;
  std::map<VertexPair, std::size_t> edge_owner;  // shadow edge -> element index

  bool operator==(const Decomposition&) const = default;
};

// Raised when the block structure does not admit the decomposition, which
// only happens for input containing a Berge-C5.
class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& what, std::optional<BergeWitness> c5)
      : std::runtime_error(what), c5_(std::move(c5)) {}
  const std::optional<BergeWitness>& c5_witness() const { return c5_; }

 private:
  std::optional<BergeWitness> c5_;
};

// Blocks are processed independently (in parallel when threads are
// available) and concatenated in block order.
Decomposition decompose(const Hypergraph3& h);

struct AlphaStats {
  Rational alpha1;    // fraction of shadow edges in triangles
  Rational alpha2;    // fraction of shadow edges in 2-paths
  Rational alpha_k4;  // 1 - alpha1 - alpha2
  std::size_t triangles = 0;
  std::size_t paths = 0;
  std::size_t k4s = 0;
  std::size_t shadow_edges = 0;
};

// With no shadow edges both fractions are 0 and alpha_k4 is 1 by the
// defining identity.
AlphaStats alpha_stats(const Decomposition& d, const ShadowGraph& g);

struct Claim6Report {
  Rational hyperedges;  // |H|
  Rational predicted;   // (a1/3 + a2/2 + 2(1 - a1 - a2)/3) |G|
  bool holds = false;
};

Claim6Report verify_claim6(const Hypergraph3& h, const Decomposition& d);

struct Observation7Violation {
  std::size_t element = 0;
  std::string reason;
};

struct Observation7Report {
  std::vector<Observation7Violation> violations;
  bool holds() const { return violations.empty(); }
};

// Triangle => its triple is a hyperedge; Path2 abc => abc is a hyperedge and
// ac is fat; K4 => all four triples are hyperedges.
Observation7Report verify_observation7(const Hypergraph3& h, const Decomposition& d);

}  // namespace berge5
