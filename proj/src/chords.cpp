// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/chords.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "pkn/error.hpp"

namespace pkn::chords {

namespace {

constexpr std::array<const char*, 12> kCanonicalRoots = {
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};

// Representative roots naming the four augmented classes.
constexpr std::array<const char*, 4> kAugNames = {"Ab", "F", "D", "B"};

int mod12(int x) { return ((x % 12) + 12) % 12; }

// Root name -> pitch class, or -1.  Accepts enharmonic alternates and 's'
// in place of '#'.
int root_value(const std::string& s) {
  static const std::map<std::string, int> table = {
      {"C", 0},  {"C#", 1}, {"Db", 1}, {"D", 2},  {"D#", 3}, {"Eb", 3},
      {"E", 4},  {"F", 5},  {"F#", 6}, {"Gb", 6}, {"G", 7},  {"G#", 8},
      {"Ab", 8}, {"A", 9},  {"A#", 10}, {"Bb", 10}, {"B", 11}};
  std::string key = s;
  if (key.size() == 2 && key[1] == 's') key[1] = '#';
  auto it = table.find(key);
  return it == table.end() ? -1 : it->second;
}

}  // namespace

FiniteSetPtr universe() {
  static const FiniteSetPtr h = [] {
    std::vector<std::string> labels;
    for (int n = 0; n < 12; ++n)
      labels.push_back(format_chord({Quality::Major, n}));
    for (int n = 0; n < 12; ++n)
      labels.push_back(format_chord({Quality::Minor, n}));
    for (int k = 0; k < 4; ++k)
      labels.push_back(format_chord({Quality::Augmented, k}));
    return make_set("H", std::move(labels));
  }();
  return h;
}

FiniteSetPtr pitch_classes() {
  static const FiniteSetPtr z12 = [] {
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(std::to_string(i));
    return make_set("Z12", std::move(labels));
  }();
  return z12;
}

std::vector<int> pc_set(const Chord& c) {
  int r = c.root;
  std::vector<int> out;
  switch (c.quality) {
    case Quality::Major:
      out = {r, mod12(r + 4), mod12(r + 7)};
      break;
    case Quality::Minor:
      out = {r, mod12(r + 3), mod12(r + 7)};
      break;
    case Quality::Augmented:
      out = {r, r + 4, r + 8};
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> pc_set(int universe_index) {
  return pc_set(chord_at(universe_index));
}

Chord chord_at(int universe_index) {
  if (universe_index < 0 || universe_index >= 28) {
    throw Error("chord index " + std::to_string(universe_index) +
                " outside 0..27");
  }
  if (universe_index < 12) return {Quality::Major, universe_index};
  if (universe_index < 24) return {Quality::Minor, universe_index - 12};
  return {Quality::Augmented, universe_index - 24};
}

int index_of(const Chord& c) {
  switch (c.quality) {
    case Quality::Major:
      return c.root;
    case Quality::Minor:
      return 12 + c.root;
    case Quality::Augmented:
      return 24 + c.root;
  }
  throw Error("invalid chord quality");
}

Chord parse_chord(const std::string& name) {
  // Quality is the suffix; the root is whatever precedes it.
  static const std::array<std::pair<const char*, Quality>, 3> suffixes = {
      {{"aug", Quality::Augmented}, {"M", Quality::Major},
       {"m", Quality::Minor}}};
  for (const auto& [suffix, quality] : suffixes) {
    const std::string suf = suffix;
    if (name.size() <= suf.size() ||
        name.compare(name.size() - suf.size(), suf.size(), suf) != 0) {
      continue;
    }
    const std::string root = name.substr(0, name.size() - suf.size());
    int pc = root_value(root);
    if (pc < 0) {
      throw Error("cannot parse chord '" + name + "': unknown root '" + root +
                  "'");
    }
    if (quality == Quality::Augmented) return {quality, pc % 4};
    return {quality, pc};
  }
  throw Error("cannot parse chord '" + name +
              "': expected a root followed by M, m, or aug");
}

std::string format_chord(const Chord& c) {
  switch (c.quality) {
    case Quality::Major:
      return std::string(kCanonicalRoots[c.root]) + "M";
    case Quality::Minor:
      return std::string(kCanonicalRoots[c.root]) + "m";
    case Quality::Augmented:
      return std::string(kAugNames[c.root]) + "aug";
  }
  throw Error("invalid chord quality");
}

int parse_pitch_class(const std::string& name) {
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
    int v = std::stoi(name);
    if (v >= 0 && v <= 11) return v;
    throw Error("pitch class '" + name + "' outside 0..11");
  }
  int pc = root_value(name);
  if (pc < 0) throw Error("cannot parse pitch class '" + name + "'");
  return pc;
}

bool pmn_related(const std::vector<int>& a, const std::vector<int>& b, int m,
                 int n) {
  if (a.size() != b.size()) {
    throw Error("pmn_related: pc-sets of different cardinality (" +
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                ")");
  }
  const int sz = static_cast<int>(a.size());
  std::vector<int> perm(sz);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int semis = 0, wholes = 0;
    bool ok = true;
    for (int i = 0; i < sz && ok; ++i) {
      int from = a[static_cast<size_t>(i)];
      int to = b[static_cast<size_t>(perm[static_cast<size_t>(i)])];
      int d = mod12(to - from);
      bool common = std::find(b.begin(), b.end(), from) != b.end();
      if (common) {
        ok = d == 0;  // the bijection must fix every shared pitch class
      } else if (d == 1 || d == 11) {
        ++semis;
      } else if (d == 2 || d == 10) {
        ++wholes;
      } else {
        ok = false;
      }
    }
    if (ok && semis == m && wholes == n) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Relation pmn_relation(int m, int n) {
  auto h = universe();
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < 28; ++i) sets.push_back(pc_set(i));
  for (int i = 0; i < 28; ++i) {
    for (int j = 0; j < 28; ++j) {
      if (i != j && pmn_related(sets[static_cast<size_t>(i)],
                                sets[static_cast<size_t>(j)], m, n)) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return Relation::from_pairs(h, h, pairs);
}

namespace {

int maj(int n) { return mod12(n); }
int min_(int n) { return 12 + mod12(n); }
int aug(int k) { return 24 + ((k % 4) + 4) % 4; }

void both(std::vector<std::pair<int, int>>& pairs, int a, int b) {
  pairs.emplace_back(a, b);
  pairs.emplace_back(b, a);
}

Relation build_named(char name) {
  auto h = universe();
  std::vector<std::pair<int, int>> pairs;
  switch (name) {
    case 'P':
      for (int n = 0; n < 12; ++n) both(pairs, maj(n), min_(n));
      for (int k = 0; k < 4; ++k) pairs.emplace_back(aug(k), aug(k));
      break;
    case 'L':
      for (int n = 0; n < 12; ++n) both(pairs, maj(n), min_(n + 4));
      for (int k = 0; k < 4; ++k) pairs.emplace_back(aug(k), aug(k));
      break;
    case 'U':
      for (int n = 0; n < 12; ++n) {
        both(pairs, maj(n), aug(n));
        both(pairs, min_(n), aug(n + 3));
      }
      break;
    case 'S':
      for (int n = 0; n < 12; ++n) {
        both(pairs, maj(n), min_(n));
        both(pairs, maj(n), min_(n + 4));
        both(pairs, maj(n), aug(n));
        both(pairs, min_(n), aug(n + 3));
      }
      break;
    case 'T':
      for (int n = 0; n < 12; ++n) {
        both(pairs, maj(n), maj(n + 4));
        both(pairs, maj(n), maj(n + 8));
        both(pairs, maj(n), min_(n + 1));
        both(pairs, maj(n), min_(n + 5));
        both(pairs, maj(n), aug(n + 3));
        both(pairs, min_(n), min_(n + 4));
        both(pairs, min_(n), min_(n + 8));
        both(pairs, min_(n), aug(n));
      }
      break;
    default:
      throw Error(std::string("unknown named relation '") + name + "'");
  }
  return Relation::from_pairs(h, h, pairs);
}

}  // namespace

Relation named_relation(char name) {
  static const std::map<char, Relation> cache = [] {
    std::map<char, Relation> out;
    for (char c : {'P', 'L', 'U', 'S', 'T'}) out.emplace(c, build_named(c));
    return out;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) {
    throw Error(std::string("unknown named relation '") + name + "'");
  }
  return it->second;
}

Relation transposition(int n) {
  return Relation::from_function(pitch_classes(), pitch_classes(),
                                 [n](int x) { return mod12(x + n); });
}

Relation inversion(int n) {
  return Relation::from_function(pitch_classes(), pitch_classes(),
                                 [n](int x) { return mod12(n - x); });
}

}  // namespace pkn::chords
