#pragma once

// Backtracking core shared by the Berge cycle detectors. Works on any type
// exposing incident(v), edge(id) and edges_with_pair(u, v).

#include <algorithm>
#include <vector>

#include "berge5/hypergraph.hpp"

namespace berge5::detail {

template <typename Graph>
struct CycleSearch {
  const Graph& h;
  std::vector<Vertex> verts;
  std::vector<EdgeId> used;
  Vertex close_vertex = 0;
  Vertex min_vertex = 0;  // intermediate vertices must be > min_vertex
  bool use_min = false;

  bool edge_used(EdgeId id) const { return std::find(used.begin(), used.end(), id) != used.end(); }
  bool vertex_used(Vertex x) const {
    return x == close_vertex || std::find(verts.begin(), verts.end(), x) != verts.end();
  }

  // Extends verts by `remaining` vertices, then closes with a hyperedge
  // containing verts.back() and close_vertex. On success verts/used hold the
  // sequence.
  bool run(std::size_t remaining) {
    const Vertex last = verts.back();
    if (remaining == 0) {
      for (EdgeId id : h.edges_with_pair(last, close_vertex)) {
        if (!edge_used(id)) {
          used.push_back(id);
          return true;
        }
      }
      return false;
    }
    for (EdgeId id : h.incident(last)) {
      if (edge_used(id)) continue;
      used.push_back(id);
      for (Vertex x : h.edge(id)) {
        if (x == last || vertex_used(x)) continue;
        if (use_min && x <= min_vertex) continue;
        verts.push_back(x);
        if (run(remaining - 1)) return true;
        verts.pop_back();
      }
      used.pop_back();
    }
    return false;
  }
};

}  // namespace berge5::detail
