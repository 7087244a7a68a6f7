// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0
//
// Randomized invariants with a fixed seed: algebraic laws of relations,
// closure and word bookkeeping of the generated monoids, graph metric
// sanity, and transport of nets along homographies.  Failures print the
// seed-determined iteration so they replay exactly.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pkn/chords.hpp"
#include "pkn/context.hpp"
#include "pkn/graphs.hpp"
#include "pkn/monoid.hpp"
#include "pkn/pknet.hpp"
#include "pkn/relation.hpp"

namespace {

using pkn::Context;
using pkn::FiniteSetPtr;
using pkn::Generator;
using pkn::GeneratorSet;
using pkn::Homography;
using pkn::Labeling;
using pkn::LaxNatTrans;
using pkn::MonoidMap;
using pkn::Relation;
using pkn::RelMonoid;
using pkn::RelPKNet;
using pkn::ThinCategory;

constexpr unsigned kSeed = 20260822;

FiniteSetPtr generic_set(const std::string& name, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(name + std::to_string(i));
  return pkn::make_set(name, std::move(labels));
}

Relation random_relation(std::mt19937& rng, const FiniteSetPtr& src,
                         const FiniteSetPtr& dst, double density = 0.3) {
  std::bernoulli_distribution bit(density);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < src->size(); ++a) {
    for (int b = 0; b < dst->size(); ++b) {
      if (bit(rng)) pairs.push_back({a, b});
    }
  }
  return Relation::from_pairs(src, dst, pairs);
}

// The four-chord chain net used as a transport payload.
RelPKNet chain_net() {
  const Context& ctx = pkn::context("upl");
  const ThinCategory shape = ThinCategory::ordinal(4);
  std::vector<FiniteSetPtr> sets;
  std::vector<Relation> covers;
  for (int i = 0; i < 4; ++i) {
    sets.push_back(generic_set("X" + std::to_string(i), 1));
  }
  for (int i = 0; i < 3; ++i) {
    covers.push_back(Relation::from_pairs(sets[static_cast<size_t>(i)],
                                          sets[static_cast<size_t>(i) + 1],
                                          {{0, 0}}));
  }
  pkn::FormFunctor form(shape, sets, covers);
  Labeling lab;
  lab.cover_words = {"U", "U", "P"};
  const FiniteSetPtr& carrier = ctx.monoid.generators().carrier();
  const std::vector<std::string> chords = {"DM", "Daug", "Gm", "GM"};
  std::vector<Relation> components;
  for (int i = 0; i < 4; ++i) {
    components.push_back(Relation::from_pairs(
        sets[static_cast<size_t>(i)], carrier,
        {{0, pkn::chords::index_of(
                 pkn::chords::parse_chord(chords[static_cast<size_t>(i)]))}}));
  }
  return RelPKNet{std::move(form), &ctx, std::move(lab),
                  LaxNatTrans{std::move(components)}};
}

// Transposition by k semitones as a bijection of the 28-chord universe.
Relation transposition(int k) {
  const FiniteSetPtr u = pkn::chords::universe();
  return Relation::from_function(u, u, [k](int c) {
    if (c < 12) return (c + k) % 12;
    if (c < 24) return 12 + (c - 12 + k) % 12;
    return 24 + (c - 24 + k) % 4;
  });
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("relation algebra laws on random instances") {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> size(1, 9);
  for (int iter = 0; iter < 200; ++iter) {
    CAPTURE(iter);
    const FiniteSetPtr A = generic_set("A", size(rng));
    const FiniteSetPtr B = generic_set("B", size(rng));
    const FiniteSetPtr C = generic_set("C", size(rng));
    const FiniteSetPtr D = generic_set("D", size(rng));
    const Relation a = random_relation(rng, A, B);
    const Relation b = random_relation(rng, B, C);
    const Relation b2 = random_relation(rng, B, C);
    const Relation c = random_relation(rng, C, D);

    // composition: associative, unital, converse-reversing
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK(Relation::identity(A).compose(a) == a);
    CHECK(a.compose(Relation::identity(B)) == a);
    CHECK(a.compose(b).converse() == b.converse().compose(a.converse()));
    CHECK(a.converse().converse() == a);

    // union/intersection: lattice laws and compose distributivity
    CHECK(a.compose(b.union_with(b2)) ==
          a.compose(b).union_with(a.compose(b2)));
    CHECK(a.compose(b).union_with(a.compose(b2))
              .includes(a.compose(b.intersect(b2))));
    CHECK(b.union_with(b2).includes(b));
    CHECK(b.includes(b.intersect(b2)));
    CHECK(b.union_with(b2).count() ==
          b.count() + b2.count() - b.intersect(b2).count());

    // difference partitions
    CHECK(b.difference(b2).intersect(b2).count() == 0);
    CHECK(b.difference(b2).union_with(b.intersect(b2)) == b);

    // inclusion is monotone under composition on either side
    const Relation bigger = b.union_with(b2);
    CHECK(a.compose(bigger).includes(a.compose(b)));
    CHECK(bigger.compose(c).includes(b.compose(c)));

    // inclusion is a partial order
    CHECK(b.includes(b));
    if (b.includes(b2) && b2.includes(b)) CHECK(b == b2);
    CHECK(Relation::full(B, C).includes(b));
    CHECK(b.includes(Relation::empty(B, C)));
  }
}

TEST_CASE("closure is independent of generator order") {
  std::mt19937 rng(kSeed + 1);
  const Context& upl = pkn::context("upl");
  std::vector<Generator> gens = upl.monoid.generators().generators();
  for (int iter = 0; iter < 5; ++iter) {
    CAPTURE(iter);
    std::shuffle(gens.begin(), gens.end(), rng);
    const RelMonoid shuffled = RelMonoid::generate(
        GeneratorSet(upl.monoid.generators().carrier(), gens));
    REQUIRE(shuffled.size() == upl.monoid.size());
    for (int i = 0; i < shuffled.size(); ++i) {
      CHECK(upl.monoid.index_of(shuffled.element(i)) >= 0);
    }
  }
}

TEST_CASE("monoid tables agree with relation composition") {
  std::mt19937 rng(kSeed + 2);
  for (const std::string preset : {"upl", "s", "t", "st", "ti"}) {
    CAPTURE(preset);
    const RelMonoid& m = pkn::context(preset).monoid;
    std::uniform_int_distribution<int> pick(0, m.size() - 1);
    for (int iter = 0; iter < 60; ++iter) {
      const int x = pick(rng);
      const int y = pick(rng);
      const int z = pick(rng);
      CHECK(m.product(x, m.product(y, z)) == m.product(m.product(x, y), z));
      CHECK(m.element(m.product(x, y)) ==
            m.element(x).compose(m.element(y)));
      CHECK(m.product(0, x) == x);
      CHECK(m.product(x, 0) == x);
    }
  }
}

TEST_CASE("canonical words evaluate back to their elements") {
  std::mt19937 rng(kSeed + 3);
  for (const std::string preset : {"upl", "s", "t", "st", "ti", "trivial"}) {
    CAPTURE(preset);
    const RelMonoid& m = pkn::context(preset).monoid;
    for (int i = 0; i < m.size(); ++i) {
      CHECK(m.evaluate_to_index(m.canonical_word(i)) == i);
      CHECK(m.evaluate_word(m.canonical_word(i)) == m.element(i));
    }
    // random letter strings: cayley stepping equals word evaluation
    const auto& gens = m.generators().generators();
    if (gens.empty()) continue;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
    std::uniform_int_distribution<int> len(0, 8);
    for (int iter = 0; iter < 40; ++iter) {
      std::string word;
      int stepped = 0;
      const int n = len(rng);
      for (int k = 0; k < n; ++k) {
        const int g = pick(rng);
        word += gens[static_cast<size_t>(g)].name;
        stepped = m.cayley(stepped, g);
      }
      CHECK(m.evaluate_to_index(word.empty() ? "e" : word) == stepped);
    }
  }
}

TEST_CASE("no canonical word has a shorter spelling") {
  std::mt19937 rng(kSeed + 4);
  const RelMonoid& m = pkn::context("upl").monoid;
  const auto& gens = m.generators().generators();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  for (int iter = 0; iter < 300; ++iter) {
    std::string word;
    int stepped = 0;
    std::uniform_int_distribution<int> len(0, 10);
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      const int g = pick(rng);
      word += gens[static_cast<size_t>(g)].name;
      stepped = m.cayley(stepped, g);
    }
    CHECK(m.letters(stepped).size() <= word.size());
  }
}

TEST_CASE("unit tables record two-sided inverses") {
  for (const std::string preset : {"upl", "s", "t", "st", "ti"}) {
    CAPTURE(preset);
    const RelMonoid& m = pkn::context(preset).monoid;
    const pkn::SubMonoid u = pkn::units(m);
    for (size_t a = 0; a < u.elements.size(); ++a) {
      bool has_inverse = false;
      for (size_t b = 0; b < u.elements.size(); ++b) {
        if (m.product(u.elements[a], u.elements[b]) == 0 &&
            m.product(u.elements[b], u.elements[a]) == 0) {
          has_inverse = true;
        }
      }
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("graph metric sanity on random vertex pairs") {
  std::mt19937 rng(kSeed + 5);
  for (const auto& g : {pkn::graphs::cube_dance(), pkn::graphs::weitzmann()}) {
    CAPTURE(g.m);
    CHECK(g.adjacency == g.adjacency.converse());
    std::uniform_int_distribution<int> pick(0, g.vertices->size() - 1);
    for (int iter = 0; iter < 80; ++iter) {
      const int a = pick(rng);
      const int b = pick(rng);
      const int c = pick(rng);
      const auto ab = graph_distance(g, a, b);
      const auto ba = graph_distance(g, b, a);
      REQUIRE(ab.has_value() == ba.has_value());
      if (!ab) continue;
      CHECK(ab->distance == ba->distance);
      CHECK(ab->path.front() == a);
      CHECK(ab->path.back() == b);
      CHECK(static_cast<int>(ab->path.size()) == ab->distance + 1);
      for (size_t k = 0; k + 1 < ab->path.size(); ++k) {
        CHECK(g.adjacency.contains(ab->path[k], ab->path[k + 1]));
      }
      const auto bc = graph_distance(g, b, c);
      const auto ac = graph_distance(g, a, c);
      if (ab && bc) {
        REQUIRE(ac.has_value());
        CHECK(ac->distance <= ab->distance + bc->distance);
      }
    }
  }
}

TEST_CASE("transposition homographies transport the chain net") {
  const Context& upl = pkn::context("upl");
  const RelPKNet net = chain_net();
  REQUIRE(verify_pknet(net).pass);
  for (int k = 0; k < 12; ++k) {
    CAPTURE(k);
    const Homography h{&upl, &upl, MonoidMap::identity(upl.monoid),
                       transposition(k)};
    CHECK(is_isography(h));
    const RelPKNet image = apply_homography(net, h);
    CHECK(verify_pknet(image).pass);
    CHECK(verify_homography(net, image, h).pass);
  }
}

TEST_CASE("homography inclusion is a partial order on equal maps") {
  const Context& upl = pkn::context("upl");
  const auto make = [&](const Relation& nu) {
    return Homography{&upl, &upl, MonoidMap::identity(upl.monoid), nu};
  };
  const Homography small = make(transposition(5));
  const Homography big =
      make(transposition(5).union_with(transposition(11)));
  CHECK(homography_included(small, small));
  CHECK(homography_included(small, big));
  CHECK(!homography_included(big, small));
}

TEST_CASE("search agrees with filtering every labeling by verification") {
  const Context& upl = pkn::context("upl");
  const ThinCategory shape = ThinCategory::ordinal(3);
  std::vector<FiniteSetPtr> sets;
  std::vector<Relation> covers;
  for (int i = 0; i < 3; ++i) {
    sets.push_back(generic_set("X" + std::to_string(i), 1));
  }
  for (int i = 0; i < 2; ++i) {
    covers.push_back(Relation::from_pairs(sets[static_cast<size_t>(i)],
                                          sets[static_cast<size_t>(i) + 1],
                                          {{0, 0}}));
  }
  const pkn::FormFunctor form(shape, sets, covers);
  const FiniteSetPtr& carrier = upl.monoid.generators().carrier();
  const std::vector<std::string> chords = {"DM", "Daug", "Gm"};
  std::vector<Relation> components;
  for (int i = 0; i < 3; ++i) {
    components.push_back(Relation::from_pairs(
        sets[static_cast<size_t>(i)], carrier,
        {{0, pkn::chords::index_of(
                 pkn::chords::parse_chord(chords[static_cast<size_t>(i)]))}}));
  }
  const LaxNatTrans phi{components};

  const std::vector<Labeling> found =
      search_labelings(form, phi, upl, /*functional_form=*/false);

  std::vector<std::vector<std::string>> manual;
  for (int w1 = 0; w1 < upl.monoid.size(); ++w1) {
    for (int w2 = 0; w2 < upl.monoid.size(); ++w2) {
      Labeling lab;
      lab.cover_words = {upl.monoid.canonical_word(w1),
                         upl.monoid.canonical_word(w2)};
      const RelPKNet candidate{form, &upl, lab, phi};
      if (verify_pknet(candidate).pass) manual.push_back(lab.cover_words);
    }
  }
  REQUIRE(found.size() == manual.size());
  for (size_t i = 0; i < found.size(); ++i) {
    CHECK(found[i].cover_words == manual[i]);
  }
}

}  // TEST_SUITE
