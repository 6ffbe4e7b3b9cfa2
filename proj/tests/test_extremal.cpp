#include <doctest.h>

#include <stdexcept>

#include "berge5/berge.hpp"
#include "berge5/extremal.hpp"
#include "oracles.hpp"

using namespace berge5;

TEST_SUITE("extremal") {
  TEST_CASE("Fano incidence graph") {
    const BipartiteGraph g = incidence_c4free_bipartite(2);
    CHECK(g.left_count() == 7);
    CHECK(g.right_count() == 7);
    CHECK(g.edge_count() == 21);
    CHECK(g.girth() == std::optional<std::size_t>{6});
    CHECK(g.is_c4_free());
  }

  TEST_CASE("incidence graph of PG(2,3)") {
    const BipartiteGraph g = incidence_c4free_bipartite(3);
    CHECK(g.left_count() == 13);
    CHECK(g.edge_count() == 52);
    CHECK(g.is_c4_free());
  }

  TEST_CASE("incidence graph needs a small prime") {
    CHECK_THROWS_AS(incidence_c4free_bipartite(4), std::invalid_argument);
    CHECK_THROWS_AS(incidence_c4free_bipartite(1), std::invalid_argument);
    CHECK_THROWS_AS(incidence_c4free_bipartite(17), std::invalid_argument);
  }

  TEST_CASE("blow-up of the Fano incidence graph") {
    const BipartiteGraph g = incidence_c4free_bipartite(2);
    const Hypergraph3 h = bollobas_gyori(g);
    CHECK(h.vertex_count() == 21);
    CHECK(h.edge_count() == 21);
    CHECK(is_c5_free(h));
    // every hyperedge is {a, u1, u2} with a on the A side
    for (const Triple& t : h.edges()) {
      CHECK(t[0] < 7);
      CHECK(t[1] >= 7);
      CHECK(t[2] == t[1] + 1);
      CHECK((t[1] - 7) % 2 == 0);
    }
    CHECK_FALSE(bollobas_gyori_layout(g).empty());
  }

  TEST_CASE("blow-up of a single edge") {
    const Hypergraph3 h = bollobas_gyori(BipartiteGraph::make(1, 1, {{0, 0}}));
    CHECK(h.vertex_count() == 3);
    CHECK(h.edges() == std::vector<Triple>{{0, 1, 2}});
  }

  TEST_CASE("blow-up refuses a 4-cycle") {
    CHECK_THROWS_AS(bollobas_gyori(BipartiteGraph::make(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})),
                    std::invalid_argument);
  }

  TEST_CASE("two-colouring") {
    const ShadowGraph tri = ShadowGraph::from_edges(3, std::vector<VertexPair>{{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(BipartiteGraph::from_graph(tri), std::invalid_argument);
    const ShadowGraph c6 = incidence_c4free_bipartite(2).as_graph();
    const BipartiteGraph back = BipartiteGraph::from_graph(c6);
    CHECK(back.edge_count() == 21);
    CHECK(back.left_count() + back.right_count() == 14);
  }

  TEST_CASE("greedy generator") {
    const Hypergraph3 h4 = random_c5free(4, 1);
    CHECK(h4.edge_count() == 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const std::size_t n = 5 + seed % 10;
      const Hypergraph3 h = random_c5free(n, seed);
      CHECK(h == random_c5free(n, seed));
      CHECK(is_c5_free(h));
      // maximal: every missing triple closes a Berge-C5
      std::vector<Triple> t = h.edges();
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex c = b + 1; c < n; ++c) {
            const Triple x{a, b, c};
            if (h.find_edge(x)) continue;
            t.push_back(x);
            CHECK_FALSE(is_c5_free(Hypergraph3::build(n, t)));
            t.pop_back();
          }
    }
    CHECK_THROWS_AS(random_c5free(41, 0), std::invalid_argument);
  }

  TEST_CASE("exact search on small vertex counts") {
    CHECK(search_extremal(4).m == 4);
    const SearchResult r5 = search_extremal(5);
    CHECK(r5.exact);
    CHECK(r5.m == 5);
    std::size_t prev = 0;
    for (std::size_t n = 3; n <= 7; ++n) {
      const SearchResult r = search_extremal(n);
      CHECK(r.exact);
      CHECK(r.m >= prev);
      CHECK(r.m >= r.lower_bound);
      CHECK(r.witness.edge_count() == r.m);
      CHECK(r.witness.vertex_count() == n);
      CHECK(is_c5_free(r.witness));
      prev = r.m;
    }
    CHECK_THROWS_AS(search_extremal(9), std::invalid_argument);
  }

  TEST_CASE("search budget marks the result inexact") {
    SearchOptions o;
    o.budget = std::chrono::milliseconds(1);
    o.greedy_seeds = 1;
    const SearchResult r = search_extremal(8, o);
    CHECK_FALSE(r.exact);
    CHECK(is_c5_free(r.witness));
    CHECK(r.witness.edge_count() == r.m);
  }
}
