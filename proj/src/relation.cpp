// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/relation.hpp"

#include <bit>

#include "pkn/error.hpp"

namespace pkn {

namespace {

size_t words_for(int bits) { return (static_cast<size_t>(bits) + 63) / 64; }

}  // namespace

Relation::Relation(FiniteSetPtr src, FiniteSetPtr dst)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      words_per_row_(words_for(dst_->size())),
      bits_(static_cast<size_t>(src_->size()) * words_per_row_, 0) {}

Relation Relation::empty(FiniteSetPtr src, FiniteSetPtr dst) {
  return Relation(std::move(src), std::move(dst));
}

Relation Relation::identity(FiniteSetPtr s) {
  Relation r(s, s);
  for (int i = 0; i < s->size(); ++i) r.set(i, i);
  return r;
}

Relation Relation::full(FiniteSetPtr src, FiniteSetPtr dst) {
  Relation r(std::move(src), std::move(dst));
  for (int a = 0; a < r.src_->size(); ++a)
    for (int b = 0; b < r.dst_->size(); ++b) r.set(a, b);
  return r;
}

Relation Relation::from_pairs(FiniteSetPtr src, FiniteSetPtr dst,
                              const std::vector<std::pair<int, int>>& pairs) {
  Relation r(std::move(src), std::move(dst));
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= r.src_->size() || b < 0 || b >= r.dst_->size()) {
      throw Error("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") out of range for relation " + r.src_->name() + " -> " +
                  r.dst_->name());
    }
    r.set(a, b);
  }
  return r;
}

Relation Relation::from_label_pairs(
    FiniteSetPtr src, FiniteSetPtr dst,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Relation r(std::move(src), std::move(dst));
  for (const auto& [a, b] : pairs) r.set(r.src_->index(a), r.dst_->index(b));
  return r;
}

Relation Relation::from_function(FiniteSetPtr src, FiniteSetPtr dst,
                                 const std::function<int(int)>& f) {
  Relation r(std::move(src), std::move(dst));
  for (int a = 0; a < r.src_->size(); ++a) {
    int b = f(a);
    if (b < 0 || b >= r.dst_->size()) {
      throw Error("function value " + std::to_string(b) + " for " +
                  std::to_string(a) + " out of range for set '" +
                  r.dst_->name() + "'");
    }
    r.set(a, b);
  }
  return r;
}

void Relation::set(int a, int b) {
  row(a)[static_cast<size_t>(b) / 64] |= uint64_t{1} << (b % 64);
}

bool Relation::contains(int a, int b) const {
  if (a < 0 || a >= src_->size() || b < 0 || b >= dst_->size()) return false;
  return (row(a)[static_cast<size_t>(b) / 64] >> (b % 64)) & 1;
}

std::vector<int> Relation::image_of(int a) const {
  std::vector<int> out;
  if (a < 0 || a >= src_->size()) {
    throw Error("source index " + std::to_string(a) +
                " out of range for relation on '" + src_->name() + "'");
  }
  for (int b = 0; b < dst_->size(); ++b)
    if (contains(a, b)) out.push_back(b);
  return out;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < src_->size(); ++a)
    for (int b = 0; b < dst_->size(); ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

int Relation::count() const {
  int n = 0;
  for (uint64_t w : bits_) n += std::popcount(w);
  return n;
}

Relation Relation::compose(const Relation& next) const {
  if (!dst_->same_elements(*next.src_)) {
    throw Error("compose: middle sets disagree ('" + dst_->name() + "' vs '" +
                next.src_->name() + "')");
  }
  Relation out(src_, next.dst_);
  for (int a = 0; a < src_->size(); ++a) {
    uint64_t* dest = out.row(a);
    for (int b = 0; b < dst_->size(); ++b) {
      if (!contains(a, b)) continue;
      const uint64_t* mid = next.row(b);
      for (size_t w = 0; w < out.words_per_row_; ++w) dest[w] |= mid[w];
    }
  }
  return out;
}

void Relation::require_same_shape(const Relation& other, const char* op) const {
  if (!src_->same_elements(*other.src_) || !dst_->same_elements(*other.dst_)) {
    throw Error(std::string(op) + ": relations have different endpoint sets ('" +
                src_->name() + " -> " + dst_->name() + "' vs '" +
                other.src_->name() + " -> " + other.dst_->name() + "')");
  }
}

Relation Relation::union_with(const Relation& other) const {
  require_same_shape(other, "union");
  Relation out = *this;
  for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

Relation Relation::intersect(const Relation& other) const {
  require_same_shape(other, "intersect");
  Relation out = *this;
  for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= other.bits_[i];
  return out;
}

Relation Relation::difference(const Relation& other) const {
  require_same_shape(other, "difference");
  Relation out = *this;
  for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] &= ~other.bits_[i];
  return out;
}

Relation Relation::converse() const {
  Relation out(dst_, src_);
  for (int a = 0; a < src_->size(); ++a)
    for (int b = 0; b < dst_->size(); ++b)
      if (contains(a, b)) out.set(b, a);
  return out;
}

bool Relation::includes(const Relation& other) const {
  require_same_shape(other, "includes");
  for (size_t i = 0; i < bits_.size(); ++i)
    if (other.bits_[i] & ~bits_[i]) return false;
  return true;
}

bool Relation::is_left_total() const {
  for (int a = 0; a < src_->size(); ++a) {
    bool any = false;
    for (size_t w = 0; w < words_per_row_; ++w) any |= row(a)[w] != 0;
    if (!any) return false;
  }
  return true;
}

bool Relation::is_function() const {
  for (int a = 0; a < src_->size(); ++a) {
    int n = 0;
    for (size_t w = 0; w < words_per_row_; ++w) n += std::popcount(row(a)[w]);
    if (n != 1) return false;
  }
  return true;
}

bool Relation::is_bijection() const {
  return is_function() && converse().is_function();
}

bool Relation::is_symmetric() const {
  if (!src_->same_elements(*dst_)) {
    throw Error("is_symmetric: endpoints differ ('" + src_->name() + "' vs '" +
                dst_->name() + "')");
  }
  return *this == converse();
}

bool operator==(const Relation& a, const Relation& b) {
  return a.src_->same_elements(*b.src_) && a.dst_->same_elements(*b.dst_) &&
         a.bits_ == b.bits_;
}

size_t Relation::hash() const {
  // FNV-1a over the packed rows; endpoint sizes seed the state so relations
  // of different shape rarely collide.
  size_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= static_cast<size_t>(v);
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(src_->size()));
  mix(static_cast<uint64_t>(dst_->size()));
  for (uint64_t w : bits_) mix(w);
  return h;
}

}  // namespace pkn
