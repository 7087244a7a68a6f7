// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pkn/relation.hpp"

namespace pkn::graphs {

// Simple undirected graph on the chord universe carrying the (m, n)
// parsimony parameters it was built from.
struct ParsimoniousGraph {
  FiniteSetPtr vertices;
  Relation adjacency;  // symmetric, loop-free
  int m;
  int n;
};

ParsimoniousGraph parsimonious_graph(int m, int n);
ParsimoniousGraph cube_dance();  // (1, 0)
ParsimoniousGraph weitzmann();   // (2, 0)

int degree(const ParsimoniousGraph& g, int v);
int edge_count(const ParsimoniousGraph& g);

struct PathResult {
  int distance;
  std::vector<int> path;  // vertex indices, endpoints included
};

// Breadth-first shortest distance with one witness path.  The witness is
// canonical: among all shortest paths it has the lexicographically least
// sequence of vertex labels.  nullopt when unreachable.
std::optional<PathResult> graph_distance(const ParsimoniousGraph& g, int from,
                                         int to);

// The P/L subgraph of the (1, 0) graph (augmented self-loops discarded,
// which isolates the four augmented vertices), decomposed into connected
// components.  Each component is returned as a cyclic vertex sequence
// starting from its least vertex index and stepping to the least-index
// neighbour.  Components are ordered by least vertex index.
std::vector<std::vector<int>> hexacycles(const ParsimoniousGraph& g);

// Graphviz text: one node per chord, one line per undirected edge.
std::string graph_dot(const ParsimoniousGraph& g);

}  // namespace pkn::graphs
