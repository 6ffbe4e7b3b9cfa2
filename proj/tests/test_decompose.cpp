#include <doctest.h>

#include "berge5/decompose.hpp"
#include "berge5/extremal.hpp"
#include "berge5/parallel.hpp"
#include "berge5/structure.hpp"
#include "oracles.hpp"

using namespace berge5;

namespace {

Hypergraph3 make(std::size_t n, std::vector<Triple> t) { return Hypergraph3::build(n, t); }

// Independent partition check: every shadow edge of the matrix oracle is
// covered by exactly one element.
bool exact_partition(const Hypergraph3& h, const Decomposition& d) {
  const auto a = oracle::shadow_matrix(h.vertex_count(), h.edges());
  std::map<VertexPair, int> cover;
  for (const auto& e : d.elements) {
    for (const auto& p : e.shadow_edges()) ++cover[p];
  }
  std::size_t total = 0;
  for (const auto& [p, k] : cover) {
    if (k != 1 || !a[p.first][p.second]) return false;
    ++total;
  }
  return total == oracle::edge_count(a);
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("single hyperedge is one triangle") {
    const Hypergraph3 h = make(3, {{0, 1, 2}});
    const Decomposition d = decompose(h);
    REQUIRE(d.elements.size() == 1);
    CHECK(d.elements[0].kind == ElementKind::Triangle);
    const AlphaStats s = alpha_stats(d, shadow(h));
    CHECK(s.alpha1 == Rational(1));
    CHECK(s.alpha2 == Rational(0));
    const Claim6Report c6 = verify_claim6(h, d);
    CHECK(c6.hyperedges == Rational(1));
    CHECK(c6.holds);
  }

  TEST_CASE("K4^3 is one K4") {
    const Hypergraph3 h = make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    const Decomposition d = decompose(h);
    REQUIRE(d.elements.size() == 1);
    CHECK(d.elements[0].kind == ElementKind::K4);
    CHECK(d.elements[0].provenance.size() == 4);
    const AlphaStats s = alpha_stats(d, shadow(h));
    CHECK(s.alpha1 == Rational(0));
    CHECK(s.alpha2 == Rational(0));
    CHECK(verify_claim6(h, d).predicted == Rational(4));
    CHECK(verify_observation7(h, d).holds());
  }

  TEST_CASE("crown of size two") {
    const Hypergraph3 h = make(4, {{0, 1, 2}, {0, 1, 3}});
    const Decomposition d = decompose(h);
    REQUIRE(d.elements.size() == 2);
    CHECK(d.elements[0].kind == ElementKind::Triangle);
    CHECK(d.elements[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(d.elements[1].kind == ElementKind::Path2);
    CHECK(d.elements[1].vertices == std::vector<Vertex>{0, 3, 1});
    const AlphaStats s = alpha_stats(d, shadow(h));
    CHECK(s.alpha1 == Rational(3, 5));
    CHECK(s.alpha2 == Rational(2, 5));
    CHECK(verify_claim6(h, d).holds);
  }

  TEST_CASE("F1 splits into three 2-paths") {
    const Hypergraph3 h = make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    const Decomposition d = decompose(h);
    CHECK(d.elements.size() == 3);
    for (const auto& e : d.elements) CHECK(e.kind == ElementKind::Path2);
    CHECK(exact_partition(h, d));
    CHECK(verify_observation7(h, d).holds());
    CHECK(verify_claim6(h, d).holds);
  }

  TEST_CASE("F2 splits into four 2-paths through the centre") {
    const Hypergraph3 h = make(5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}});
    const Decomposition d = decompose(h);
    CHECK(d.elements.size() == 4);
    for (const auto& e : d.elements) {
      CHECK(e.kind == ElementKind::Path2);
      CHECK(e.vertices[2] == 0);
    }
    CHECK(exact_partition(h, d));
    CHECK(verify_observation7(h, d).holds());
  }

  TEST_CASE("thin hyperedges outside the core become 2-paths on their thin pairs") {
    const Hypergraph3 h = make(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {1, 3, 5}});
    const Decomposition d = decompose(h);
    CHECK(exact_partition(h, d));
    bool found = false;
    for (const auto& e : d.elements) {
      if (e.vertices == std::vector<Vertex>{0, 4, 2}) found = true;
    }
    CHECK(found);
    CHECK(verify_observation7(h, d).holds());
    CHECK(verify_claim6(h, d).holds);
  }

  TEST_CASE("observation check flags a 2-path with a thin end pair") {
    const Hypergraph3 h = make(3, {{0, 1, 2}});
    Decomposition d;
    d.elements.push_back({ElementKind::Path2, {0, 1, 2}, 0, {0}});
    const Observation7Report r = verify_observation7(h, d);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].element == 0);
  }

  TEST_CASE("input with a Berge-C5 is refused with a witness") {
    std::vector<Triple> t;
    for (Vertex a = 0; a < 5; ++a)
      for (Vertex b = a + 1; b < 5; ++b)
        for (Vertex c = b + 1; c < 5; ++c) t.push_back({a, b, c});
    const Hypergraph3 h = make(5, t);
    try {
      decompose(h);
      FAIL("expected DecompositionError");
    } catch (const DecompositionError& e) {
      REQUIRE(e.c5_witness());
      CHECK(is_valid_witness(h, PatternGraph::cycle(5), *e.c5_witness()));
    }
  }

  TEST_CASE("greedy C5-free hypergraphs: partition, accounting, determinism") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const Hypergraph3 h = random_c5free(5 + seed % 26, seed);
      set_thread_count(1);
      const Decomposition d1 = decompose(h);
      set_thread_count(4);
      const Decomposition d4 = decompose(h);
      CHECK(d1 == d4);
      CHECK(exact_partition(h, d1));
      CHECK(verify_observation7(h, d1).holds());
      CHECK(verify_claim6(h, d1).holds);
      // hyperedges = 2-paths + triangles + 4 * K4s
      const AlphaStats s = alpha_stats(d1, shadow(h));
      CHECK(h.edge_count() == s.paths + s.triangles + 4 * s.k4s);
      // per block: elements = hyperedges, except a K4^3 core (4 -> 1)
      const auto bs = blocks(h);
      std::vector<std::size_t> per_block(bs.size(), 0);
      for (const auto& e : d1.elements) ++per_block[e.block];
      for (std::size_t b = 0; b < bs.size(); ++b) {
        const bool k4 = classify_core(h, bs[b]).shape == CoreShape::K43;
        CHECK(per_block[b] == bs[b].edges.size() - (k4 ? 3 : 0));
      }
    }
    set_thread_count(0);
  }
}
