// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pkn {

// Single exception type for all library failures: parse errors, mismatched
// domains, violated preconditions.  Callers that want to distinguish causes
// should check before calling; the message is for humans.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace pkn
