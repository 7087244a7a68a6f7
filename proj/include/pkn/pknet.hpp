// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pkn/context.hpp"
#include "pkn/finite_set.hpp"
#include "pkn/monoid.hpp"
#include "pkn/relation.hpp"

namespace pkn {

// A finite poset presented by covering pairs, viewed as a thin category:
// between two objects there is exactly one arrow a -> b when a <= b and none
// otherwise, so composites are unique and functoriality of a labeling is
// decidable by comparing paths.
class ThinCategory {
 public:
  // The linear order X0 <= X1 <= ... <= X(n-1); throws for n < 1.
  static ThinCategory ordinal(int n);
  // Reflexive-transitive closure of `covers` (pairs of object indices) over
  // the named objects.  Throws on duplicate names, out-of-range or self
  // covers, duplicate covers, and order cycles.
  static ThinCategory from_covers(std::vector<std::string> objects,
                                  std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(objects_.size()); }
  const std::string& object(int i) const;
  int index(const std::string& name) const;  // throws on unknown names
  bool leq(int a, int b) const;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // All non-identity arrows (a, b), in lexicographic order.
  std::vector<std::pair<int, int>> arrows() const;
  // Every spelling of the arrow a -> b as a chain of covers; each path lists
  // cover indices.  For a == b the single empty path; empty when a and b are
  // incomparable.
  std::vector<std::vector<int>> cover_paths(int a, int b) const;

  friend bool operator==(const ThinCategory& x, const ThinCategory& y) {
    return x.objects_ == y.objects_ && x.covers_ == y.covers_;
  }
  friend bool operator!=(const ThinCategory& x, const ThinCategory& y) {
    return !(x == y);
  }

 private:
  ThinCategory() = default;
  void close_and_audit();  // builds leq_ from covers_, checks antisymmetry

  std::vector<std::string> objects_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<bool>> leq_;
};

// The form R: a nonempty finite set per shape object and a relation per
// covering arrow.  A longer arrow gets the union, over all cover paths, of
// the composites along the path, unless a relation for it was supplied
// explicitly — laxity is only informative for independently specified
// composites.
class FormFunctor {
 public:
  FormFunctor(ThinCategory shape, std::vector<FiniteSetPtr> object_sets,
              std::vector<Relation> cover_relations);

  const ThinCategory& shape() const { return shape_; }
  const FiniteSetPtr& object_set(int i) const;
  // Pins the relation of the non-cover arrow a -> b.
  void set_relation(int a, int b, Relation r);
  // The relation of the unique arrow a -> b; identity when a == b.
  Relation relation_on(int a, int b) const;
  const std::map<std::pair<int, int>, Relation>& explicit_relations() const {
    return explicit_;
  }

  friend bool operator==(const FormFunctor& x, const FormFunctor& y);
  friend bool operator!=(const FormFunctor& x, const FormFunctor& y) {
    return !(x == y);
  }

 private:
  ThinCategory shape_;
  std::vector<FiniteSetPtr> sets_;
  std::vector<Relation> cover_rels_;
  std::map<std::pair<int, int>, Relation> explicit_;
};

// Words over a context's generators, one per covering arrow, extended to
// longer arrows by concatenation along any cover path.  Specific longer
// arrows may carry declared words instead (the declared word then competes
// with every path in the functoriality check).
struct Labeling {
  std::vector<std::string> cover_words;  // parallel to the shape's covers
  std::map<std::pair<int, int>, std::string> composite_words;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// One component per shape object: a relation from the form's object set into
// the context carrier.
struct LaxNatTrans {
  std::vector<Relation> components;

  friend bool operator==(const LaxNatTrans&, const LaxNatTrans&) = default;
};

// A relational PK-net: shape (inside the form), context, labeling and the
// lax natural transformation tying the form to the context's relations.
struct RelPKNet {
  FormFunctor form;
  const Context* context;  // borrowed; registry presets outlive everything
  Labeling labeling;
  LaxNatTrans phi;

  const ThinCategory& shape() const { return form.shape(); }
};

// Outcome of a verification: one item per executed check, with a
// counterexample or note in `detail` when a check fails.
struct Report {
  struct Item {
    std::string what;
    bool ok;
    std::string detail;
  };
  bool pass = true;
  std::vector<Item> items;

  void add(const std::string& what, bool ok, const std::string& detail = "");
  // The items of `other`, appended; pass becomes the conjunction.
  void merge(const Report& other);
  // A one-line summary of the first failing item, or "ok".
  std::string first_failure() const;
};

// The monoid element labeling the arrow a -> b: the declared composite word
// when present, otherwise the concatenation along the first cover path;
// identity for a == b.
int label_element(const ThinCategory& shape, const RelMonoid& m,
                  const Labeling& lab, int a, int b);

// Checks, for every composable pair of non-identity arrows, that the
// composite of the two relations is included in the relation of the combined
// arrow.  Identity arrows are not constrained.
Report verify_lax_functor(const FormFunctor& form);

// Checks that all cover paths (and any declared composite word) for the same
// arrow evaluate to the same monoid element.
Report verify_labeling(const ThinCategory& shape, const Context& ctx,
                       const Labeling& lab);

// Checks left-totality of every component and, for every non-identity arrow
// f: a -> b with label element m, the inclusion of R(f);phi_b in
// phi_a;S(m).
Report verify_lax_nat(const RelPKNet& net);

// The conjunction of verify_lax_functor, verify_labeling and verify_lax_nat,
// with all items aggregated.
Report verify_pknet(const RelPKNet& net);

// All labelings (one monoid element per covering arrow, written as its
// canonical word) for which verify_pknet passes.  With `functional_form`
// set, additionally requires every arrow relation of the form to be a
// function, mimicking set-valued nets; enumeration is |monoid|^covers and
// throws beyond the 1000000-candidate budget.
std::vector<Labeling> search_labelings(const FormFunctor& form,
                                       const LaxNatTrans& phi,
                                       const Context& ctx,
                                       bool functional_form);

// A PK-homography between contexts: a monoid map N together with the single
// component nu of a left-total natural transformation between the carriers.
struct Homography {
  const Context* src;
  const Context* dst;
  MonoidMap hom;  // from src's monoid to dst's monoid
  Relation nu;    // from src's carrier to dst's carrier
};

// Relabels the net through h.hom and composes every phi component with
// h.nu (the minimal admissible phi'), then verifies the result; throws if
// the verification fails.
RelPKNet apply_homography(const RelPKNet& net, const Homography& h);

// Checks shapes equal, forms equal, dst labels = h.hom of src labels,
// left-totality and naturality of nu, and inclusion of nu.phi in phi' per
// object.  Shape or form mismatch short-circuits the remaining checks.
Report verify_homography(const RelPKNet& src, const RelPKNet& dst,
                         const Homography& h);

// True iff h.hom is a monoid isomorphism and h.nu is a bijection.
bool is_isography(const Homography& h);

// Endpoint-matched composition: hom chains through `then`, nu through
// `compose`.
Homography compose_homographies(const Homography& a, const Homography& b);

// Inclusion of homographies with the same monoid map: a's nu included in
// b's.  Throws when endpoints or monoid maps differ.
bool homography_included(const Homography& a, const Homography& b);

}  // namespace pkn
