// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pkn/monoid.hpp"

namespace pkn {

// A registered analytical context: a generated monoid of relations over a
// fixed carrier, together with the defining equations its generators are
// known to satisfy.
struct Context {
  std::string name;
  RelMonoid monoid;
  // Presentation entries; each inner list chains words asserted equal,
  // e.g. {"P^2", "L^2", "e"} states P^2 = L^2 = e.
  std::vector<std::vector<std::string>> relators;
};

// Looks up a built-in context by name.  Available presets:
//   "upl"     U, L and P on the 28-chord universe (40 elements)
//   "s"       the semitone-parsimony relation S alone (7 elements)
//   "t"       the whole-tone-parsimony relation T alone (4 elements)
//   "st"      S and T together (8 elements)
//   "ti"      transposition T1 and inversion I0 on the 12 pitch classes
//   "trivial" a one-point carrier whose only generator is the identity
// Throws Error for any other name.
const Context& context(const std::string& name);

// Names of all registered presets, in a stable order.
const std::vector<std::string>& context_names();

}  // namespace pkn
