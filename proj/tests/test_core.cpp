#include <doctest.h>

#include <random>
#include <sstream>

#include "berge5/h3_io.hpp"
#include "berge5/hypergraph.hpp"
#include "oracles.hpp"

using namespace berge5;

namespace {

Hypergraph3 k43() {
  const std::vector<Triple> t{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return Hypergraph3::build(4, t);
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("build sorts triples and removes duplicates") {
    const std::vector<Triple> t{{2, 1, 0}, {0, 1, 2}, {3, 1, 0}};
    const Hypergraph3 h = Hypergraph3::build(4, t);
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(0) == Triple{0, 1, 2});
    CHECK(h.edge(1) == Triple{0, 1, 3});
    CHECK(pair_index_consistent(h));
  }

  TEST_CASE("build rejects bad triples") {
    const std::vector<Triple> out_of_range{{0, 1, 4}};
    CHECK_THROWS_AS(Hypergraph3::build(4, out_of_range), std::invalid_argument);
    const std::vector<Triple> repeated{{0, 1, 1}};
    CHECK_THROWS_AS(Hypergraph3::build(4, repeated), std::invalid_argument);
  }

  TEST_CASE("shadow of K4^3 is K4") {
    const ShadowGraph g = shadow(k43());
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
  }

  TEST_CASE("shadow and codegree agree with the matrix oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 3 + rng() % 8;
      const Hypergraph3 h = oracle::random_hypergraph(rng, n, rng() % 20);
      const auto a = oracle::shadow_matrix(n, h.edges());
      CHECK(oracle::graph_matrix(shadow(h)) == a);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          CHECK(codeg(h, u, v) == oracle::codegree(h.edges(), u, v));
          CHECK(h.edges_with_pair(u, v).size() == oracle::codegree(h.edges(), u, v));
        }
      }
      CHECK(pair_index_consistent(h));
    }
  }

  TEST_CASE("codegree of a vertex with itself is rejected") {
    CHECK_THROWS_AS(codeg(k43(), 1, 1), std::invalid_argument);
  }

  TEST_CASE("link and neighbourhood") {
    const Hypergraph3 h = k43();
    const ShadowGraph l0 = link(h, 0);
    CHECK(l0.edge_count() == 3);
    CHECK(l0.degree(0) == 0);
    CHECK(l0.adjacent(1, 2));
    CHECK(neighborhood(h, 0) == std::vector<Vertex>{1, 2, 3});
  }

  TEST_CASE("degree sandwich") {
    const DegreeReport r = degrees(k43());
    CHECK(r.average_degree == Rational(3));
    CHECK(r.average_shadow_degree == Rational(3));
    for (std::size_t v = 0; v < 4; ++v) {
      CHECK(r.degree[v] == 3);
      CHECK(r.lower_holds[v]);
      CHECK(r.upper_holds[v]);
    }
  }

  TEST_CASE("peel removes low degree vertices and relabels") {
    // K4^3 on 0..3 plus a pendant hyperedge 3 4 5.
    const std::vector<Triple> t{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4, 5}};
    const Hypergraph3 h = Hypergraph3::build(6, t);
    // average degree 15/6; vertices 4 and 5 have degree 1 < (1/2) * 15/6.
    const PeelResult p = peel(h, Rational(1, 2));
    CHECK(p.hypergraph.vertex_count() == 4);
    CHECK(p.hypergraph.edge_count() == 4);
    CHECK(p.original == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_THROWS_AS(peel(h, Rational(0)), std::invalid_argument);
  }

  TEST_CASE("h3 round trip is byte identical for canonical files") {
    const std::string text = "# example\n4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
    const H3File f = parse_h3_string(text);
    CHECK(f.hypergraph == k43());
    CHECK(f.header_comments == std::vector<std::string>{" example"});
    CHECK(to_h3_string(f.hypergraph, f.header_comments) == text);
  }

  TEST_CASE("h3 labels in order of first appearance") {
    const H3File f = parse_h3_string("3 1\nx y z\n");
    CHECK(f.labels == std::vector<std::string>{"x", "y", "z"});
    CHECK(f.hypergraph.edge(0) == Triple{0, 1, 2});
  }

  TEST_CASE("h3 parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        parse_h3_string(text);
      } catch (const H3ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("4 1\n0 1\n") == 2);
    CHECK(line_of("# c\nfour 1\n") == 2);
    CHECK(line_of("4 2\n0 1 2\n") == 2);
    CHECK(line_of("4 1\n0 1 1\n") == 2);
    CHECK(line_of("4 1\n0 1 2\n1 2 3\n") == 3);
    CHECK(line_of("2 1\na b c\n") == 2);
  }
}
