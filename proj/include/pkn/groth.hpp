// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pkn/context.hpp"
#include "pkn/pknet.hpp"
#include "pkn/relation.hpp"

namespace pkn {

// A finite category with explicitly listed objects, morphisms, identities,
// and composites.  Construction materializes the composition table and then
// audits the category laws exhaustively: identity endpoints, the unit laws
// for every morphism, and associativity over every composable triple.  The
// audit stays cheap even for six-figure triple counts because composites
// live in flat arrays indexed by (first morphism, position of the second
// among its source object's out-list).
class SmallCategory {
 public:
  struct Morphism {
    int src;
    int dst;
    std::string tag;  // display label; carries no structural meaning
  };

  // `compose_fn(a, b)` must return the composite morphism id of the
  // composable pair a-then-b (dst of a equals src of b).  It is called once
  // per composable pair while the table is filled; every result is checked
  // for endpoints before the law audit runs.  Throws Error on any law
  // violation, bad identity wiring, duplicate object names, or an
  // out-of-range morphism endpoint.
  SmallCategory(std::vector<std::string> objects,
                std::vector<Morphism> morphisms, std::vector<int> identities,
                const std::function<int(int, int)>& compose_fn);

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object(int i) const;

  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const Morphism& morphism(int i) const;
  // Identity morphism id of an object.
  int identity(int object) const;

  bool composable(int a, int b) const;
  // a then b; throws Error when the pair does not compose.
  int compose(int a, int b) const;

  // Morphism ids leaving / entering an object, in morphism-id order.
  const std::vector<int>& out_of(int object) const;
  const std::vector<int>& into(int object) const;

 private:
  void audit() const;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> pos_in_out_;   // morphism -> position inside out_[src]
  std::vector<size_t> offset_;    // morphism -> start of its result segment
  std::vector<int> comp_;         // packed composite ids, one per pair
};

// A functor between small categories, tabulated on objects and morphisms.
// Borrows both categories; keep them alive for the functor's lifetime.
struct CatFunctor {
  const SmallCategory* src;
  const SmallCategory* dst;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  bool operator==(const CatFunctor&) const = default;
};

// Checks that a tabulated functor is well formed: the tables cover the
// source, images keep their endpoints, identities land on identities, and
// composition is preserved over every composable pair.
Report verify_functor(const CatFunctor& f);

// True when the functor never merges two parallel morphisms, i.e. the
// morphism table is injective on every hom-set.
bool is_faithful(const CatFunctor& f);

// a then b; b must start at the category a ends at.
CatFunctor compose_functors(const CatFunctor& a, const CatFunctor& b);

// The one-object category whose morphisms are a context's monoid elements,
// tagged by canonical word and composed through the multiplication table.
SmallCategory delooping(const Context& ctx);

// The Grothendieck construction applied to a context: a category whose
// objects are the carrier points and whose morphisms are the triples
// (s, g, s') with s related to s' under the monoid element g, bundled with
// the projection functor onto the context's one-object category.  The
// projection keeps only the middle element, and it is faithful: a hom-set
// never holds two distinct triples sharing their element.
//
// Composing (s, g, s') with (s', g', s'') yields (s, gg', s''); the
// composite triple exists because the element relations multiply exactly.
// Identity morphisms are the triples (s, e, s), so the identity element
// must contain the identity relation -- generated monoids always do, and
// the constructor rejects data that does not.
//
// The bundled projection points into the instance, so the type is pinned:
// neither copyable nor movable.  Build it where it will live.
class Grothendieck {
 public:
  explicit Grothendieck(const Context& ctx);
  Grothendieck(const Grothendieck&) = delete;
  Grothendieck& operator=(const Grothendieck&) = delete;

  const Context& context() const { return *ctx_; }
  const SmallCategory& category() const { return category_; }
  const SmallCategory& base() const { return base_; }
  const CatFunctor& projection() const { return projection_; }

  // Monoid element carried by a morphism of category().
  int element_of(int morphism) const;
  // Morphism id of the triple (s, g, s2), or -1 when s S(g) s2 fails.
  int triple_id(int s, int g, int s2) const;

 private:
  struct Parts;
  Grothendieck(const Context& ctx, Parts&& parts);
  static Parts enumerate(const Context& ctx);
  static SmallCategory build_category(const Context& ctx, Parts& parts,
                                      const std::vector<int>& lookup);

  const Context* ctx_;
  std::vector<int> lookup_;  // (s * elements + g) * points + s2 -> id or -1
  SmallCategory category_;
  SmallCategory base_;
  CatFunctor projection_;
};

// Reads a faithful functor k into a context's one-object category back as
// relation data: result[g] relates s to s' exactly when some morphism
// s -> s' of k's source category maps to the element g.  The source
// objects become the points of a fresh set reusing their names.  Throws
// when k is not faithful or its codomain does not multiply like the
// context's monoid.
std::vector<Relation> from_faithful(const CatFunctor& k, const Context& ctx);

// A morphism between context diagrams: a monoid homomorphism L paired with
// a functional carrier component lambda, subject to the naturality
// inclusion  S(g) ; lambda  within  lambda ; S'(L(g))  for every element g
// of the source monoid.
struct DiagramMorphism {
  MonoidMap hom;
  Relation lambda;
};

// Lifts a diagram morphism to a functor between Grothendieck categories:
// the triple (s, g, s') goes to (lambda(s), L(g), lambda(s')).  Checks the
// naturality inclusions first -- the failing element and starting point
// are named in the error -- and verifies the projection square: projecting
// the lifted morphism equals applying L after projecting the original.
CatFunctor lift_morphism(const DiagramMorphism& d, const Grothendieck& src,
                         const Grothendieck& dst);

}  // namespace pkn
