#include <doctest.h>

#include <random>

#include "berge5/extremal.hpp"
#include "berge5/paths.hpp"
#include "oracles.hpp"

using namespace berge5;

namespace {

Hypergraph3 make(std::size_t n, std::vector<Triple> t) { return Hypergraph3::build(n, t); }

ShadowGraph graph(std::size_t n, std::vector<VertexPair> e) { return ShadowGraph::from_edges(n, e); }

ShadowGraph k3() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Hypergraph3 k43() { return make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

// Crown a b c_1..c_k with a = 0, b = 1.
Hypergraph3 crown(std::size_t k) {
  std::vector<Triple> t;
  for (Vertex i = 0; i < k; ++i) t.push_back({0, 1, static_cast<Vertex>(2 + i)});
  return make(k + 2, t);
}

const InequalityReport& at_vertex(const std::vector<InequalityReport>& rs, Vertex v) {
  for (const auto& r : rs) {
    if (r.subject == "v=" + std::to_string(v)) return r;
  }
  FAIL("no report for vertex");
  return rs.front();
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("3-walk counts") {
    CHECK(count_3walks(k3()) == 24);
    CHECK(count_3walks(graph(2, {{0, 1}})) == 2);
    CHECK(count_3walks(ShadowGraph(5)) == 0);
    CHECK(count_3walks(graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 18);
  }

  TEST_CASE("3-walks and good 3-paths agree with enumeration") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 10;
      const ShadowGraph g = oracle::random_graph(rng, n, 0.1 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
      const auto a = oracle::graph_matrix(g);
      CHECK(count_3walks(g) == oracle::walks3(a));
      const PathStats s = count_good_3paths(g);
      CHECK(s.walks3 == oracle::walks3(a));
      CHECK(s.good3 == oracle::good3(a));
      CHECK(s.good3 <= s.walks3);
      for (const auto& [u, v] : g.edges()) {
        CHECK(good_3paths_from_edge(g, u, v) == oracle::good3_from_edge(a, u, v));
      }
    }
  }

  TEST_CASE("Blakley-Roy") {
    const InequalityReport r = blakley_roy_check(k3());
    CHECK(r.holds);
    CHECK(r.lhs == Rational(24));
    CHECK(r.slack == doctest::Approx(0.0));
    const InequalityReport star = blakley_roy_check(graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.holds);
    CHECK(star.rhs_value == doctest::Approx(13.5));
  }

  TEST_CASE("2-path classification") {
    const ShadowGraph tri = shadow(make(3, {{0, 1, 2}}));
    CHECK(classify_2path(tri, 0, 1, 2) == PathKind::Bad);
    const ShadowGraph path = graph(3, {{0, 1}, {1, 2}});
    CHECK(classify_2path(path, 0, 1, 2) == PathKind::Good);
    CHECK_THROWS_AS(classify_2path(path, 0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify_2path(path, 0, 1, 0), std::invalid_argument);
  }

  TEST_CASE("good 3-paths") {
    // 0-1-2-3 with the chord 1-3: the second 2-path is bad
    const ShadowGraph g = graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    CHECK_FALSE(is_good_3path(g, {0, 1, 2, 3}));
    const ShadowGraph p4 = graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_good_3path(p4, {0, 1, 2, 3}));
    CHECK_THROWS_AS(is_good_3path(p4, {0, 2, 1, 3}), std::invalid_argument);
    CHECK(count_good_3paths(shadow(make(3, {{0, 1, 2}}))).good3 == 0);
  }

  TEST_CASE("bowtie shadow has only bad 2-paths") {
    const ShadowGraph g = shadow(make(5, {{0, 1, 2}, {0, 3, 4}}));
    const PathStats s = count_good_3paths(g);
    CHECK(s.good3 == oracle::good3(oracle::graph_matrix(g)));
    CHECK(s.good3 == 0);
    CHECK(s.bad2 == 12);
  }

  TEST_CASE("longest path and path search") {
    const ShadowGraph p4 = graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(longest_path(p4) == std::optional<std::size_t>{3});
    CHECK(find_path(p4, 3));
    CHECK_FALSE(find_path(p4, 4));
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
      const ShadowGraph g = oracle::random_graph(rng, 1 + rng() % 9, 0.35);
      const std::size_t expect = oracle::longest_path(oracle::graph_matrix(g));
      CHECK(longest_path(g) == std::optional<std::size_t>{expect});
      CHECK(find_path(g, expect).has_value());
      CHECK_FALSE(find_path(g, expect + 1).has_value());
    }
    CHECK_FALSE(longest_path(p4, 3));
  }

  TEST_CASE("Erdos-Gallai") {
    const InequalityReport r = erdos_gallai_check(k3(), 5);
    CHECK(r.holds);
    CHECK(r.lhs == Rational(3));
    CHECK(r.rhs_value == doctest::Approx(6.0));
    // a long path makes the bound inapplicable, not false
    const ShadowGraph p6 = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(erdos_gallai_check(p6, 2).holds);
  }

  TEST_CASE("link size on K4^3 and at a crown apex") {
    const auto k4 = verify_claim8(k43());
    CHECK(k4.size() == 4);
    for (const auto& r : k4) {
      CHECK(r.holds);
      CHECK(r.lhs == Rational(3));
      CHECK(r.rhs_value == doctest::Approx(6.0));
    }
    const auto c = verify_claim8(crown(4));
    CHECK(at_vertex(c, 0).lhs == Rational(4));
    CHECK(at_vertex(c, 0).rhs_value == doctest::Approx(10.0));
  }

  TEST_CASE("neighbourhood edges") {
    for (const auto& r : verify_neighborhood_lemma(k43())) {
      CHECK(r.lhs == Rational(3));
      CHECK(r.holds);
    }
    // Crown apex a = 0: N(a) = {b, c_1..c_k}; only the pairs b c_i are
    // shadow edges inside N(a).
    for (std::size_t k = 1; k <= 6; ++k) {
      const Hypergraph3 h = crown(k);
      const auto a = oracle::shadow_matrix(h.vertex_count(), h.edges());
      std::size_t inside = 0;
      for (std::size_t x = 1; x < h.vertex_count(); ++x)
        for (std::size_t y = x + 1; y < h.vertex_count(); ++y) inside += a[0][x] && a[0][y] && a[x][y];
      CHECK(inside == k);
      const InequalityReport& r = at_vertex(verify_neighborhood_lemma(h), 0);
      CHECK(r.lhs == Rational(static_cast<long long>(inside)));
      CHECK(r.rhs_value == doctest::Approx(8.0 * static_cast<double>(k + 1)));
      CHECK(r.holds);
    }
  }

  TEST_CASE("good 2-path bound from a vertex") {
    const Hypergraph3 h = k43();
    const InequalityReport empty = verify_lemma9(h, 0, {});
    CHECK(empty.lhs == Rational(0));
    CHECK(empty.holds);
    CHECK_THROWS_AS(verify_lemma9(crown(2), 2, {3}), std::invalid_argument);
    // star-shaped: hyperedges through 0 pairwise sharing only 0
    const Hypergraph3 star = make(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    const InequalityReport r = verify_lemma9(star, 0, {1, 2, 3, 4, 5, 6});
    CHECK(r.lhs == Rational(0));
    CHECK(r.holds);
    // isolated vertex: 0 < 0 is vacuous
    const InequalityReport iso = verify_lemma9(make(4, {{0, 1, 2}}), 3, {});
    CHECK(iso.holds);
    CHECK_FALSE(iso.note.empty());
  }

  TEST_CASE("per-element good 3-path bounds") {
    const Hypergraph3 one = make(3, {{0, 1, 2}});
    const auto r1 = verify_claims13_14_15(one, decompose(one));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].claim == "13");
    CHECK(r1[0].lhs == Rational(0));
    CHECK(r1[0].holds);
    const auto r2 = verify_claims13_14_15(k43(), decompose(k43()));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].claim == "15");
    CHECK(r2[0].lhs == Rational(0));
  }

  TEST_CASE("construction and greedy instances satisfy the counting inequalities") {
    std::vector<Hypergraph3> hs{bollobas_gyori(incidence_c4free_bipartite(3))};
    for (std::uint64_t seed = 0; seed < 40; ++seed) hs.push_back(random_c5free(5 + seed % 26, seed));
    for (const Hypergraph3& h : hs) {
      for (const auto& r : verify_claim8(h)) CHECK(r.holds);
      for (const auto& r : verify_neighborhood_lemma(h)) CHECK(r.holds);
      for (const auto& r : verify_lemma9_all(h)) CHECK(r.holds);
      CHECK(verify_claim12(h).holds);
      for (const auto& r : verify_claims13_14_15(h, decompose(h))) CHECK(r.holds);
      CHECK_FALSE(claim10_report(h).asserted);
    }
  }

  TEST_CASE("path counts agree with enumeration on small greedy shadows") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Hypergraph3 h = random_c5free(5 + seed % 8, seed);
      const ShadowGraph g = shadow(h);
      const auto a = oracle::graph_matrix(g);
      CHECK(count_good_3paths(g).good3 == oracle::good3(a));
    }
  }
}
