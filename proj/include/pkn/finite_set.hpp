// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pkn {

// An ordered finite set of distinctly labelled points.
//
// Identity is structural: everywhere the library compares the endpoints of
// relations it compares label sequences, never object addresses, so two
// independently built sets with the same labels are interchangeable.  The
// name is mnemonic only and takes no part in equality.
class FiniteSet {
 public:
  FiniteSet(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const;

  // Index of a label, or nullopt when absent.
  std::optional<int> find(const std::string& label) const;
  // Index of a label; throws Error when absent.
  int index(const std::string& label) const;

  bool same_elements(const FiniteSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using FiniteSetPtr = std::shared_ptr<const FiniteSet>;

FiniteSetPtr make_set(std::string name, std::vector<std::string> labels);

}  // namespace pkn
