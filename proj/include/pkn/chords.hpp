// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pkn/relation.hpp"

namespace pkn::chords {

// The triad universe: 28 chords indexed 0..27.
//   0..11   majors, index = root pitch class
//   12..23  minors, index = 12 + root pitch class
//   24..27  augmented triads, index = 24 + class; the four whole-tone-spaced
//           classes are named after one representative root each:
//           class 0 = Abaug {0,4,8}, 1 = Faug, 2 = Daug, 3 = Baug.
enum class Quality { Major, Minor, Augmented };

struct Chord {
  Quality quality;
  // Root pitch class 0..11 for Major/Minor; class index 0..3 for Augmented.
  int root;

  friend bool operator==(const Chord&, const Chord&) = default;
};

// The 28-chord set H with canonical labels ("CM", "C#M", ..., "Bm",
// "Abaug", "Faug", "Daug", "Baug").  Shared singleton.
FiniteSetPtr universe();

// The twelve pitch classes labelled "0".."11".  Shared singleton.
FiniteSetPtr pitch_classes();

// The three pitch classes of a chord, sorted ascending.
std::vector<int> pc_set(const Chord& c);
std::vector<int> pc_set(int universe_index);

Chord chord_at(int universe_index);
int index_of(const Chord& c);

// Grammar: root in {C, C#, Db, D, D#, Eb, E, F, F#, Gb, G, G#, Ab, A, A#,
// Bb, B} ('s' accepted for '#'), then quality in {M, m, aug}.
Chord parse_chord(const std::string& name);
std::string format_chord(const Chord& c);

// "0".."11", or a note name from the chord-root grammar.
int parse_pitch_class(const std::string& name);

// Douthett parsimony: true iff some bijection a -> b fixes every common
// pitch class, moves exactly m elements by one semitone and exactly n by a
// whole tone (both mod 12), and fixes the rest.  Exhaustive over bijections.
bool pmn_related(const std::vector<int>& a, const std::vector<int>& b, int m,
                 int n);

// Symmetric loop-free relation on the universe induced by pmn_related.
Relation pmn_relation(int m, int n);

// The named chord relations, built clause by clause:
//   P: n_M <-> n_m, plus augmented self-loops
//   L: n_M <-> (n+4)_m, plus augmented self-loops
//   U: n_M <-> (n mod 4)_aug, n_m <-> ((n+3) mod 4)_aug
//   S: P and L clauses without the self-loops, together with U
//   T: n_M <-> (n+4)_M, (n+8)_M, (n+1)_m, (n+5)_m, ((n+3) mod 4)_aug;
//      n_m <-> (n+4)_m, (n+8)_m, (n mod 4)_aug
// S and T coincide with pmn_relation(1,0) and pmn_relation(2,0).
Relation named_relation(char name);

// Bijections on the pitch classes: x -> x+n and x -> n-x (mod 12).
Relation transposition(int n);
Relation inversion(int n);

}  // namespace pkn::chords
