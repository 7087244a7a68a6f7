// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pkn/finite_set.hpp"

namespace pkn {

// Binary relation between two finite sets, stored as a boolean matrix with
// one machine-word-packed bitset row per source point.  Values are immutable
// once built; all operations return new relations.
//
// Composition is written in application order: a.compose(b) relates x to z
// when x a y and y b z for some y.  As boolean matrices this is the product
// M_a * M_b.
class Relation {
 public:
  static Relation empty(FiniteSetPtr src, FiniteSetPtr dst);
  static Relation identity(FiniteSetPtr s);
  static Relation full(FiniteSetPtr src, FiniteSetPtr dst);
  static Relation from_pairs(FiniteSetPtr src, FiniteSetPtr dst,
                             const std::vector<std::pair<int, int>>& pairs);
  static Relation from_label_pairs(
      FiniteSetPtr src, FiniteSetPtr dst,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  // Graph of a total function on indices: a -> f(a).
  static Relation from_function(FiniteSetPtr src, FiniteSetPtr dst,
                                const std::function<int(int)>& f);

  const FiniteSetPtr& src() const { return src_; }
  const FiniteSetPtr& dst() const { return dst_; }

  bool contains(int a, int b) const;
  std::vector<int> image_of(int a) const;
  std::vector<std::pair<int, int>> pairs() const;
  // Number of related pairs.
  int count() const;

  // This relation followed by `next`; requires dst and next.src to have the
  // same labels.
  Relation compose(const Relation& next) const;
  Relation union_with(const Relation& other) const;
  Relation intersect(const Relation& other) const;
  // Pairs of this relation not in `other`.
  Relation difference(const Relation& other) const;
  Relation converse() const;

  // True when every pair of `other` is also a pair of this relation.
  bool includes(const Relation& other) const;

  bool is_left_total() const;   // every source point related to something
  bool is_function() const;     // every source point related to exactly one
  bool is_bijection() const;
  bool is_symmetric() const;    // requires src and dst to coincide

  friend bool operator==(const Relation& a, const Relation& b);
  friend bool operator!=(const Relation& a, const Relation& b) {
    return !(a == b);
  }

  size_t hash() const;

 private:
  Relation(FiniteSetPtr src, FiniteSetPtr dst);

  void set(int a, int b);
  const uint64_t* row(int a) const {
    return bits_.data() + static_cast<size_t>(a) * words_per_row_;
  }
  uint64_t* row(int a) {
    return bits_.data() + static_cast<size_t>(a) * words_per_row_;
  }
  // Throws unless other shares both endpoint label sequences.
  void require_same_shape(const Relation& other, const char* op) const;

  FiniteSetPtr src_;
  FiniteSetPtr dst_;
  size_t words_per_row_;
  std::vector<uint64_t> bits_;
};

struct RelationHash {
  size_t operator()(const Relation& r) const { return r.hash(); }
};

}  // namespace pkn
