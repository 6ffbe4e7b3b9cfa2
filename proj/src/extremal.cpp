#include "berge5/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "berge5/berge.hpp"
#include "berge5/parallel.hpp"

namespace berge5 {

BipartiteGraph BipartiteGraph::make(std::size_t left, std::size_t right,
                                    std::vector<std::pair<Vertex, Vertex>> edges) {
  for (const auto& [a, b] : edges) {
    if (a >= left || b >= right) throw std::invalid_argument("bipartite edge out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  BipartiteGraph g;
  g.left_ = left;
  g.right_ = right;
  g.edges_ = std::move(edges);
  return g;
}

BipartiteGraph BipartiteGraph::from_graph(const ShadowGraph& g,
                                          std::vector<std::pair<int, Vertex>>* side_index) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          throw std::invalid_argument("graph is not bipartite (odd cycle through " +
                                      std::to_string(x) + "-" + std::to_string(y) + ")");
        }
      }
    }
  }
  std::vector<Vertex> index(n);
  std::size_t counts[2] = {0, 0};
  for (Vertex v = 0; v < n; ++v) index[v] = static_cast<Vertex>(counts[colour[v]]++);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (colour[u] == 0) {
      edges.emplace_back(index[u], index[v]);
    } else {
      edges.emplace_back(index[v], index[u]);
    }
  }
  if (side_index) {
    side_index->clear();
    for (Vertex v = 0; v < n; ++v) side_index->emplace_back(colour[v], index[v]);
  }
  return make(counts[0], counts[1], std::move(edges));
}

ShadowGraph BipartiteGraph::as_graph() const {
  std::vector<VertexPair> pairs;
  pairs.reserve(edges_.size());
  for (const auto& [a, b] : edges_) pairs.emplace_back(a, static_cast<Vertex>(left_ + b));
  return ShadowGraph::from_edges(left_ + right_, pairs);
}

std::optional<std::size_t> BipartiteGraph::girth() const {
  const ShadowGraph g = as_graph();
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const std::size_t len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool BipartiteGraph::is_c4_free() const {
  const auto g = girth();
  return !g || *g > 4;
}

namespace {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

}  // namespace

BipartiteGraph incidence_c4free_bipartite(unsigned q) {
  if (q > 13 || !is_prime(q)) {
    throw std::invalid_argument("q must be a prime <= 13 (got " + std::to_string(q) + ")");
  }
  std::vector<std::array<unsigned, 3>> points;
  for (unsigned x = 0; x < q; ++x) {
    for (unsigned y = 0; y < q; ++y) {
      for (unsigned z = 0; z < q; ++z) {
        const unsigned lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) points.push_back({x, y, z});
      }
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex p = 0; p < points.size(); ++p) {
    for (Vertex l = 0; l < points.size(); ++l) {
      unsigned dot = 0;
      for (int i = 0; i < 3; ++i) dot += points[p][i] * points[l][i];
      if (dot % q == 0) edges.emplace_back(p, l);
    }
  }
  BipartiteGraph g = BipartiteGraph::make(points.size(), points.size(), std::move(edges));
  if (g.girth() != std::optional<std::size_t>{6}) {
    throw std::logic_error("incidence graph of PG(2, q) does not have girth 6");
  }
  return g;
}

Hypergraph3 bollobas_gyori(const BipartiteGraph& g0) {
  if (!g0.is_c4_free()) throw std::invalid_argument("input graph contains a 4-cycle");
  const std::size_t a = g0.left_count();
  std::vector<Triple> triples;
  triples.reserve(g0.edge_count());
  for (const auto& [u, b] : g0.edges()) {
    triples.push_back({u, static_cast<Vertex>(a + 2 * b), static_cast<Vertex>(a + 2 * b + 1)});
  }
  Hypergraph3 h = Hypergraph3::build(a + 2 * g0.right_count(), triples);
  if (h.edge_count() != g0.edge_count()) {
    throw std::logic_error("construction lost hyperedges");
  }
  return h;
}

std::string bollobas_gyori_layout(const BipartiteGraph& g0) {
  const std::size_t a = g0.left_count();
  return "vertices 0.." + std::to_string(a - 1) + ": unsplit side (" + std::to_string(a) +
         "); vertex b of the split side becomes the pair " + std::to_string(a) + "+2b, " +
         std::to_string(a) + "+2b+1 (" + std::to_string(g0.right_count()) + " pairs)";
}

namespace {

std::vector<Triple> all_triples(std::size_t n) {
  std::vector<Triple> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

Hypergraph3 random_c5free(std::size_t n, std::uint64_t seed) {
  if (n > 40) throw std::invalid_argument("random_c5free supports n <= 40");
  std::vector<Triple> order = all_triples(n);
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[bounded(rng, i)]);
  }
  IncrementalHypergraph inc(n);
  for (const Triple& t : order) {
    const EdgeId id = inc.push(t);
    if (inc.cycle_through(id, 5)) inc.pop();
  }
  return inc.to_hypergraph();
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

struct SearchShared {
  std::size_t n = 0;
  std::vector<Triple> triples;
  bool limited = false;
  Clock::time_point deadline;
  std::atomic<bool> stop{false};
};

class Searcher {
 public:
  explicit Searcher(SearchShared& shared) : shared_(shared), inc_(shared.n) {}

  void load(Mask chosen) {
    while (inc_.edge_count() > 0) inc_.pop();
    chosen_ = 0;
    for (Mask m = chosen; m; m &= m - 1) include(static_cast<std::size_t>(std::countr_zero(m)));
  }

  void include(std::size_t t) {
    inc_.push(shared_.triples[t]);
    chosen_ |= bit(t);
  }

  void exclude_last(std::size_t t) {
    inc_.pop();
    chosen_ &= ~bit(t);
  }

  // Members of `cand` that close no Berge-C5 with the current choice.
  Mask compatible(Mask cand) {
    Mask out = 0;
    for (Mask m = cand; m; m &= m - 1) {
      const auto t = static_cast<std::size_t>(std::countr_zero(m));
      const EdgeId id = inc_.push(shared_.triples[t]);
      if (!inc_.cycle_through(id, 5)) out |= bit(t);
      inc_.pop();
    }
    return out;
  }

  bool tick() {
    ++nodes;
    if (shared_.limited && (nodes & 1023) == 0 && Clock::now() > shared_.deadline) {
      shared_.stop = true;
    }
    return !shared_.stop.load(std::memory_order_relaxed);
  }

  // Improves `best` within the subtree of the current choice.
  void solve(Mask cand) {
    if (!tick()) return;
    const auto size = static_cast<std::size_t>(std::popcount(chosen_));
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_mask = chosen_;
      }
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    const auto t = static_cast<std::size_t>(std::countr_zero(cand));
    const Mask rest = cand & ~bit(t);
    include(t);
    const Mask next = compatible(rest);
    solve(next);
    exclude_last(t);
    solve(rest);
  }

  Mask chosen() const { return chosen_; }

  std::size_t best = 0;
  Mask best_mask = 0;
  std::uint64_t nodes = 0;

 protected:
  SearchShared& shared_;
  IncrementalHypergraph inc_;
  Mask chosen_ = 0;
};

// Relabellings that fix the prefix T_{<d} setwise, for d = 0..depth, and the
// induced action on triple indices.
class PrefixSymmetry {
 public:
  PrefixSymmetry(std::size_t n, const std::vector<Triple>& triples, std::size_t depth)
      : stab_(depth + 1) {
    std::vector<std::size_t> index(n * n * n, 0);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const Triple& t = triples[i];
      index[(t[0] * n + t[1]) * n + t[2]] = i;
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint8_t> map(triples.size());
      for (std::size_t i = 0; i < triples.size(); ++i) {
        Triple img = {perm[triples[i][0]], perm[triples[i][1]], perm[triples[i][2]]};
        std::sort(img.begin(), img.end());
        map[i] = static_cast<std::uint8_t>(index[(img[0] * n + img[1]) * n + img[2]]);
      }
      maps_.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    stab_[0].resize(maps_.size());
    std::iota(stab_[0].begin(), stab_[0].end(), 0);
    for (std::size_t d = 0; d < depth; ++d) {
      for (std::size_t p : stab_[d]) {
        if (maps_[p][d] == d) stab_[d + 1].push_back(p);
      }
    }
  }

  Mask canonical(std::size_t d, Mask x) const {
    Mask best = std::numeric_limits<Mask>::max();
    for (std::size_t p : stab_[d]) {
      Mask img = 0;
      for (Mask m = x; m; m &= m - 1) img |= bit(maps_[p][std::countr_zero(m)]);
      best = std::min(best, img);
    }
    return best;
  }

 private:
  std::vector<std::vector<std::uint8_t>> maps_;
  std::vector<std::vector<std::size_t>> stab_;
};

struct Frontier {
  Mask chosen;
  Mask cand;
};

// Sequential part: decides the triples through vertex 0, merging partial
// choices that agree up to a relabelling fixing the decided prefix.
class PrefixSearcher : public Searcher {
 public:
  PrefixSearcher(SearchShared& shared, std::size_t depth)
      : Searcher(shared), depth_(depth), symmetry_(shared.n, shared.triples, depth), seen_(depth + 1) {}

  void run(Mask cand) {
    if (!tick()) return;
    const auto size = static_cast<std::size_t>(std::popcount(chosen_));
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_mask = chosen_;
      }
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    const auto t = static_cast<std::size_t>(std::countr_zero(cand));
    // Every compatible triple below t has been decided, so the subproblem
    // only depends on the choice and min(t, depth).
    const std::size_t d = std::min(t, depth_);
    if (!seen_[d].insert(symmetry_.canonical(d, chosen_)).second) return;
    if (t >= depth_) {
      frontier.push_back({chosen_, cand});
      return;
    }
    const Mask rest = cand & ~bit(t);
    include(t);
    const Mask next = compatible(rest);
    run(next);
    exclude_last(t);
    run(rest);
  }

  std::vector<Frontier> frontier;

 private:
  std::size_t depth_;
  PrefixSymmetry symmetry_;
  std::vector<std::unordered_set<Mask>> seen_;
};

}  // namespace

SearchResult search_extremal(std::size_t n, const SearchOptions& options) {
  if (n > 8) throw std::invalid_argument("search_extremal supports n <= 8");
  const auto start = Clock::now();
  SearchShared shared;
  shared.n = n;
  shared.triples = all_triples(n);
  shared.limited = options.budget.count() > 0;
  shared.deadline = start + options.budget;

  SearchResult r;
  r.n = n;
  const std::size_t total = shared.triples.size();
  if (total == 0) {
    r.exact = true;
    r.witness = Hypergraph3::build(n, {});
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
  }

  // Lower bound from greedy maximal hypergraphs.
  Mask incumbent = 0;
  std::size_t lower = 0;
  for (std::uint64_t seed = 0; seed < options.greedy_seeds; ++seed) {
    const Hypergraph3 g = random_c5free(n, seed);
    if (g.edge_count() <= lower) continue;
    lower = g.edge_count();
    incumbent = 0;
    for (const Triple& t : g.edges()) {
      const auto it = std::lower_bound(shared.triples.begin(), shared.triples.end(), t);
      incumbent |= bit(static_cast<std::size_t>(it - shared.triples.begin()));
    }
  }
  r.lower_bound = lower;

  const std::size_t depth = (n - 1) * (n - 2) / 2;  // triples through vertex 0
  PrefixSearcher prefix(shared, depth);
  prefix.best = lower;
  prefix.best_mask = incumbent;
  const Mask everything = total == 64 ? ~Mask{0} : bit(total) - 1;
  prefix.run(everything);

  const std::size_t floor = prefix.best;
  const auto& frontier = prefix.frontier;
  std::vector<std::size_t> bests(frontier.size(), floor);
  std::vector<Mask> masks(frontier.size(), 0);
  std::vector<std::uint64_t> nodes(frontier.size(), 0);
  parallel_for(frontier.size(), [&](std::size_t i) {
    Searcher s(shared);
    s.load(frontier[i].chosen);
    s.best = floor;
    s.solve(frontier[i].cand);
    bests[i] = s.best;
    masks[i] = s.best_mask;
    nodes[i] = s.nodes;
  });

  r.m = floor;
  Mask witness = prefix.best_mask;
  r.nodes = prefix.nodes;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    r.nodes += nodes[i];
    if (bests[i] > r.m) {
      r.m = bests[i];
      witness = masks[i];
    }
  }
  r.subproblems = frontier.size();
  r.exact = !shared.stop;

  std::vector<Triple> edges;
  for (Mask m = witness; m; m &= m - 1) edges.push_back(shared.triples[std::countr_zero(m)]);
  r.witness = Hypergraph3::build(n, edges);
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace berge5
