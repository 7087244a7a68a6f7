// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/context.hpp"

#include <utility>

#include "pkn/chords.hpp"
#include "pkn/error.hpp"
#include "pkn/finite_set.hpp"

namespace pkn {
namespace {

using chords::named_relation;

Context make_upl() {
  RelMonoid m = RelMonoid::generate(
      GeneratorSet(chords::universe(), {{"U", named_relation('U')},
                                        {"L", named_relation('L')},
                                        {"P", named_relation('P')}}));
  return Context{"upl", std::move(m),
                 {{"P^2", "L^2", "e"},
                  {"LPL", "PLP"},
                  {"U^3", "U"},
                  {"UP", "UL"},
                  {"PU", "LU"},
                  {"U^2PU^2", "PU^2PU^2P"},
                  {"UPUPU^2", "PUPUPU^2P"},
                  {"U^2PUPU", "PU^2PUPUP"}}};
}

Context make_s() {
  RelMonoid m = RelMonoid::generate(
      GeneratorSet(chords::universe(), {{"S", named_relation('S')}}));
  return Context{"s", std::move(m), {{"S^7", "S^5"}}};
}

Context make_t() {
  RelMonoid m = RelMonoid::generate(
      GeneratorSet(chords::universe(), {{"T", named_relation('T')}}));
  return Context{"t", std::move(m), {{"T^4", "T^3"}}};
}

Context make_st() {
  RelMonoid m = RelMonoid::generate(
      GeneratorSet(chords::universe(), {{"S", named_relation('S')},
                                        {"T", named_relation('T')}}));
  return Context{"st", std::move(m),
                 {{"TS", "ST"},
                  {"S^3", "ST"},
                  {"T^4", "T^3"},
                  {"TS^2", "T^2"},
                  {"ST^3", "ST^2"}}};
}

Context make_ti() {
  RelMonoid m = RelMonoid::generate(
      GeneratorSet(chords::pitch_classes(), {{"T", chords::transposition(1)},
                                             {"I", chords::inversion(0)}}));
  return Context{"ti", std::move(m),
                 {{"T^12", "e"}, {"I^2", "e"}, {"ITI", "T^11"}}};
}

Context make_trivial() {
  auto pt = make_set("pt", {"*"});
  RelMonoid m =
      RelMonoid::generate(GeneratorSet(pt, {{"I", Relation::identity(pt)}}));
  return Context{"trivial", std::move(m), {}};
}

const std::vector<Context>& all_contexts() {
  static const std::vector<Context> presets = [] {
    std::vector<Context> v;
    v.push_back(make_upl());
    v.push_back(make_s());
    v.push_back(make_t());
    v.push_back(make_st());
    v.push_back(make_ti());
    v.push_back(make_trivial());
    return v;
  }();
  return presets;
}

}  // namespace

const Context& context(const std::string& name) {
  for (const Context& c : all_contexts()) {
    if (c.name == name) return c;
  }
  std::string known;
  for (const std::string& n : context_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw Error("unknown context \"" + name + "\" (known: " + known + ")");
}

const std::vector<std::string>& context_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Context& c : all_contexts()) v.push_back(c.name);
    return v;
  }();
  return names;
}

}  // namespace pkn
