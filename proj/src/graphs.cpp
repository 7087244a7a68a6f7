// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/graphs.hpp"

#include <algorithm>
#include <deque>

#include "pkn/chords.hpp"
#include "pkn/error.hpp"

namespace pkn::graphs {

ParsimoniousGraph parsimonious_graph(int m, int n) {
  return {chords::universe(), chords::pmn_relation(m, n), m, n};
}

ParsimoniousGraph cube_dance() {
  static const ParsimoniousGraph g = parsimonious_graph(1, 0);
  return g;
}

ParsimoniousGraph weitzmann() {
  static const ParsimoniousGraph g = parsimonious_graph(2, 0);
  return g;
}

int degree(const ParsimoniousGraph& g, int v) {
  return static_cast<int>(g.adjacency.image_of(v).size());
}

int edge_count(const ParsimoniousGraph& g) { return g.adjacency.count() / 2; }

std::optional<PathResult> graph_distance(const ParsimoniousGraph& g, int from,
                                         int to) {
  const int n = g.vertices->size();
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw Error("graph_distance: vertex index out of range");
  }
  // Distances measured to the target, so the witness can be grown forward
  // from the source.
  std::vector<int> dist(static_cast<size_t>(n), -1);
  std::deque<int> queue{to};
  dist[static_cast<size_t>(to)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.adjacency.image_of(v)) {
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[static_cast<size_t>(from)] < 0) return std::nullopt;

  // Greedy descent by least vertex label yields the lexicographically least
  // label sequence over all shortest paths.
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    int best = -1;
    for (int w : g.adjacency.image_of(cur)) {
      if (dist[static_cast<size_t>(w)] != dist[static_cast<size_t>(cur)] - 1)
        continue;
      if (best < 0 || g.vertices->label(w) < g.vertices->label(best)) best = w;
    }
    path.push_back(best);
    cur = best;
  }
  return PathResult{dist[static_cast<size_t>(from)], std::move(path)};
}

std::vector<std::vector<int>> hexacycles(const ParsimoniousGraph& g) {
  if (g.m != 1 || g.n != 0) {
    throw Error("hexacycles requires the (1,0) parsimonious graph, got (" +
                std::to_string(g.m) + "," + std::to_string(g.n) + ")");
  }
  const auto sub = chords::named_relation('P')
                       .union_with(chords::named_relation('L'))
                       .difference(Relation::identity(g.vertices));
  const int n = g.vertices->size();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<size_t>(start)] || sub.image_of(start).empty())
      continue;
    // Walk the cycle, always stepping to the least-index unseen direction.
    std::vector<int> cycle;
    int prev = -1;
    int cur = start;
    do {
      cycle.push_back(cur);
      seen[static_cast<size_t>(cur)] = true;
      int next = -1;
      for (int w : sub.image_of(cur)) {
        if (w != prev && (next < 0 || w < next)) next = w;
      }
      if (next < 0) {
        throw Error("hexacycles: vertex " + g.vertices->label(cur) +
                    " is not on a cycle");
      }
      prev = cur;
      cur = next;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string graph_dot(const ParsimoniousGraph& g) {
  std::string out = "graph pmn_" + std::to_string(g.m) + "_" +
                    std::to_string(g.n) + " {\n";
  const int n = g.vertices->size();
  for (int v = 0; v < n; ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + g.vertices->label(v) +
           "\"];\n";
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacency.contains(a, b)) {
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace pkn::graphs
