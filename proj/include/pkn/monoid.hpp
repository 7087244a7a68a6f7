// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pkn/relation.hpp"

namespace pkn {

struct Generator {
  std::string name;  // a single letter; 'e' is reserved for the identity
  Relation rel;      // endorelation on the carrier
};

class GeneratorSet {
 public:
  GeneratorSet(FiniteSetPtr carrier, std::vector<Generator> gens);

  const FiniteSetPtr& carrier() const { return carrier_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int count() const { return static_cast<int>(gens_.size()); }
  // Generator index for a letter, or -1.
  int find(char letter) const;

 private:
  FiniteSetPtr carrier_;
  std::vector<Generator> gens_;
};

// A monoid of relations, closed under composition, generated breadth-first
// from the identity.  Element 0 is the identity; element order is discovery
// order, which makes each element's recorded word its canonical word
// (shortest, ties broken by declared generator order).
class RelMonoid {
 public:
  static RelMonoid generate(GeneratorSet g);

  int size() const { return static_cast<int>(elements_.size()); }
  const Relation& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  const GeneratorSet& generators() const { return gens_; }

  // Canonical word as a raw letter sequence ("" for the identity).
  const std::string& letters(int i) const { return words_[static_cast<size_t>(i)]; }
  // Canonical word rendered with caret powers ("e", "U^2L", ...).
  std::string canonical_word(int i) const;

  // Index of element(i) composed with generator g.
  int cayley(int i, int g) const { return cayley_[static_cast<size_t>(i)][static_cast<size_t>(g)]; }
  // Index of element(a) composed with element(b).
  int product(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  // Index of a relation in the closure, or -1.
  int index_of(const Relation& r) const;

  // Discovery edge: element i (> 0) was first reached as
  // element(parent(i)) * generator(via(i)).
  int parent(int i) const { return parent_[static_cast<size_t>(i)]; }
  int via(int i) const { return via_[static_cast<size_t>(i)]; }

  // Word parsing: letters with optional caret powers ("U^2PU^2"), spaces
  // ignored, "e" (alone) for the identity.  Returns generator indices.
  std::vector<int> parse_word(const std::string& w) const;
  int evaluate_to_index(const std::string& w) const;
  Relation evaluate_word(const std::string& w) const;

 private:
  explicit RelMonoid(GeneratorSet g) : gens_(std::move(g)) {}

  GeneratorSet gens_;
  std::vector<Relation> elements_;
  std::vector<std::string> words_;
  std::vector<std::vector<int>> cayley_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<int> via_;
  std::unordered_map<Relation, int, RelationHash> index_;
};

// Run-length rendering of a letter sequence: "" -> "e", "UUL" -> "U^2L".
std::string render_word(const std::string& letters);

bool check_relator(const RelMonoid& m, const std::string& lhs,
                   const std::string& rhs);

struct PresentationReport {
  struct Item {
    std::string equation;  // e.g. "P^2 = L^2 = e"
    bool holds;
  };
  std::vector<Item> items;
  bool all_hold;
  int cardinality;
};

// Each relator is a list of at least two words required to evaluate to the
// same element (chained equalities like P^2 = L^2 = e are one relator).
PresentationReport check_presentation(
    const RelMonoid& m, const std::vector<std::vector<std::string>>& relators);

// The group of invertible elements, listed in discovery order, with its
// multiplication table in local positions.
struct SubMonoid {
  std::vector<int> elements;
  std::vector<std::vector<int>> table;
};
SubMonoid units(const RelMonoid& m);

// A monoid homomorphism determined by generator images.  Borrows both
// monoids; keep them alive for the map's lifetime.
class MonoidMap {
 public:
  static MonoidMap identity(const RelMonoid& m);
  // Propagates the generator images along the domain's discovery tree and
  // validates the homomorphism property on every Cayley edge.
  static std::optional<MonoidMap> try_from_generator_images(
      const RelMonoid& dom, const RelMonoid& cod, std::vector<int> images);
  static MonoidMap from_generator_images(const RelMonoid& dom,
                                         const RelMonoid& cod,
                                         std::vector<int> images);

  const RelMonoid& domain() const { return *dom_; }
  const RelMonoid& codomain() const { return *cod_; }
  int apply(int i) const { return element_map_[static_cast<size_t>(i)]; }
  const std::vector<int>& element_map() const { return element_map_; }
  const std::vector<int>& generator_images() const { return gen_images_; }

  bool is_isomorphism() const;
  // This map followed by `next` (domains must chain).
  MonoidMap then(const MonoidMap& next) const;

  friend bool operator==(const MonoidMap& a, const MonoidMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ &&
           a.element_map_ == b.element_map_;
  }

 private:
  MonoidMap(const RelMonoid* dom, const RelMonoid* cod,
            std::vector<int> images, std::vector<int> element_map)
      : dom_(dom),
        cod_(cod),
        gen_images_(std::move(images)),
        element_map_(std::move(element_map)) {}

  const RelMonoid* dom_;
  const RelMonoid* cod_;
  std::vector<int> gen_images_;
  std::vector<int> element_map_;
};

// All bijective endomorphisms, by brute force over generator-image tuples
// in lexicographic order.
std::vector<MonoidMap> automorphisms(const RelMonoid& m);

using Table = std::vector<std::vector<int>>;

Table monoid_table(const RelMonoid& m);
Table automorphism_group_table(const std::vector<MonoidMap>& auts);
Table cyclic_table(int n);
// The dihedral group with `order` elements (order even, >= 2).
Table dihedral_table(int order);
Table direct_product_table(const Table& a, const Table& b);

// Backtracking search for a table isomorphism; the witness maps indices of
// a to indices of b.
std::optional<std::vector<int>> isomorphic_tables(const Table& a,
                                                  const Table& b);

// Graphviz text for the Cayley graph: one node per element labelled by its
// canonical word, one edge per (element, generator).  Involution generators
// are drawn undirected with per-generator styles; the rest solid red.
std::string cayley_dot(const RelMonoid& m);

}  // namespace pkn
