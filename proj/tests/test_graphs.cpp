// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/graphs.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "pkn/chords.hpp"
#include "pkn/error.hpp"

namespace {

using namespace pkn::graphs;

int idx(const std::string& name) {
  return pkn::chords::universe()->index(name);
}

std::vector<std::string> labels(const std::vector<int>& path) {
  std::vector<std::string> out;
  for (int v : path) out.push_back(pkn::chords::universe()->label(v));
  return out;
}

}  // namespace

TEST_SUITE("graphs") {
  TEST_CASE("cube dance counts") {
    auto g = cube_dance();
    CHECK(g.vertices->size() == 28);
    CHECK(edge_count(g) == 48);
    for (int v = 0; v < 24; ++v) CHECK(degree(g, v) == 3);
    for (int v = 24; v < 28; ++v) CHECK(degree(g, v) == 6);
  }

  TEST_CASE("weitzmann counts") {
    auto g = weitzmann();
    CHECK(edge_count(g) == 72);
    for (int v = 0; v < 24; ++v) CHECK(degree(g, v) == 5);
    for (int v = 24; v < 28; ++v) CHECK(degree(g, v) == 6);
  }

  TEST_CASE("distances and witness paths") {
    auto g = cube_dance();
    auto r = graph_distance(g, idx("AM"), idx("F#M"));
    REQUIRE(r.has_value());
    CHECK(r->distance == 3);
    CHECK(labels(r->path) ==
          std::vector<std::string>{"AM", "Faug", "Bbm", "F#M"});

    auto self = graph_distance(g, idx("CM"), idx("CM"));
    REQUIRE(self.has_value());
    CHECK(self->distance == 0);
    CHECK(labels(self->path) == std::vector<std::string>{"CM"});

    auto step = graph_distance(g, idx("CM"), idx("Cm"));
    REQUIRE(step.has_value());
    CHECK(step->distance == 1);

    CHECK_THROWS_AS(graph_distance(g, -1, 0), pkn::Error);
  }

  TEST_CASE("weitzmann splits into two components") {
    auto g = weitzmann();
    // Roots of equal parity stay connected; the two halves never meet.
    CHECK(!graph_distance(g, idx("CM"), idx("C#M")).has_value());
    CHECK(!graph_distance(g, idx("CM"), idx("Cm")).has_value());
    CHECK(graph_distance(g, idx("CM"), idx("F#M")).has_value());
    CHECK(graph_distance(g, idx("CM"), idx("C#m")).has_value());
  }

  TEST_CASE("hexacycles") {
    auto cycles = hexacycles(cube_dance());
    REQUIRE(cycles.size() == 4);
    for (const auto& c : cycles) CHECK(c.size() == 6);

    // The C-major component (the canonical root spelling for pitch class 8
    // is G#, so the chords often written Ab major / Ab minor print as G#M
    // and G#m).
    CHECK(labels(cycles[0]) == std::vector<std::string>{"CM", "Cm", "G#M",
                                                        "G#m", "EM", "Em"});
    CHECK(labels(cycles[1]) == std::vector<std::string>{"C#M", "C#m", "AM",
                                                        "Am", "FM", "Fm"});
    CHECK(labels(cycles[2]) == std::vector<std::string>{"DM", "Dm", "BbM",
                                                        "Bbm", "F#M", "F#m"});
    CHECK(labels(cycles[3]) == std::vector<std::string>{"EbM", "Ebm", "BM",
                                                        "Bm", "GM", "Gm"});

    // Every hexacycle edge is a Cube Dance edge.
    auto adj = cube_dance().adjacency;
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        CHECK(adj.contains(c[i], c[(i + 1) % c.size()]));
      }
    }

    CHECK_THROWS_AS(hexacycles(weitzmann()), pkn::Error);
  }

  TEST_CASE("dot output") {
    auto dot = graph_dot(cube_dance());
    CHECK(dot.find("graph pmn_1_0 {") == 0);
    CHECK(dot.find("n0 [label=\"CM\"];") != std::string::npos);
    CHECK(dot.find("n27 [label=\"Baug\"];") != std::string::npos);
    size_t edges = 0;
    for (size_t pos = dot.find(" -- "); pos != std::string::npos;
         pos = dot.find(" -- ", pos + 1)) {
      ++edges;
    }
    CHECK(edges == 48);
  }
}
