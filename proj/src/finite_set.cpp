// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/finite_set.hpp"

#include <utility>

#include "pkn/error.hpp"

namespace pkn {

FiniteSet::FiniteSet(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) {
      throw Error("duplicate label '" + labels_[i] + "' in set '" + name_ +
                  "'");
    }
  }
}

const std::string& FiniteSet::label(int i) const {
  if (i < 0 || i >= size()) {
    throw Error("index " + std::to_string(i) + " out of range for set '" +
                name_ + "' of size " + std::to_string(size()));
  }
  return labels_[static_cast<size_t>(i)];
}

std::optional<int> FiniteSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error("no element '" + label + "' in set '" + name_ + "'");
  }
  return it->second;
}

FiniteSetPtr make_set(std::string name, std::vector<std::string> labels) {
  return std::make_shared<const FiniteSet>(std::move(name), std::move(labels));
}

}  // namespace pkn
