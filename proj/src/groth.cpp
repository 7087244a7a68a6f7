// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/groth.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pkn/error.hpp"
#include "pkn/monoid.hpp"

namespace pkn {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

SmallCategory::SmallCategory(std::vector<std::string> objects,
                             std::vector<Morphism> morphisms,
                             std::vector<int> identities,
                             const std::function<int(int, int)>& compose_fn)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)) {
  const int nobj = object_count();
  const int nmor = morphism_count();

  std::unordered_set<std::string> seen;
  for (const auto& name : objects_) {
    if (!seen.insert(name).second) {
      throw Error("duplicate object name " + quoted(name) + " in category");
    }
  }
  for (int i = 0; i < nmor; ++i) {
    const Morphism& m = morphisms_[static_cast<size_t>(i)];
    if (m.src < 0 || m.src >= nobj || m.dst < 0 || m.dst >= nobj) {
      throw Error("morphism " + quoted(m.tag) +
                  " has an endpoint outside the object list");
    }
  }
  if (static_cast<int>(identities_.size()) != nobj) {
    throw Error("need one identity morphism per object, got " +
                std::to_string(identities_.size()) + " for " +
                std::to_string(nobj) + " objects");
  }
  for (int x = 0; x < nobj; ++x) {
    const int id = identities_[static_cast<size_t>(x)];
    if (id < 0 || id >= nmor || morphisms_[static_cast<size_t>(id)].src != x ||
        morphisms_[static_cast<size_t>(id)].dst != x) {
      throw Error("the identity of " + quoted(objects_[static_cast<size_t>(x)]) +
                  " must be a loop on it");
    }
  }

  out_.assign(static_cast<size_t>(nobj), {});
  in_.assign(static_cast<size_t>(nobj), {});
  for (int i = 0; i < nmor; ++i) {
    out_[static_cast<size_t>(morphisms_[static_cast<size_t>(i)].src)].push_back(i);
    in_[static_cast<size_t>(morphisms_[static_cast<size_t>(i)].dst)].push_back(i);
  }
  pos_in_out_.resize(static_cast<size_t>(nmor));
  for (int x = 0; x < nobj; ++x) {
    const auto& outs = out_[static_cast<size_t>(x)];
    for (size_t p = 0; p < outs.size(); ++p) {
      pos_in_out_[static_cast<size_t>(outs[p])] = static_cast<int>(p);
    }
  }

  offset_.resize(static_cast<size_t>(nmor));
  size_t total = 0;
  for (int a = 0; a < nmor; ++a) {
    offset_[static_cast<size_t>(a)] = total;
    total += out_[static_cast<size_t>(morphisms_[static_cast<size_t>(a)].dst)].size();
  }
  comp_.resize(total);
  for (int a = 0; a < nmor; ++a) {
    const Morphism& ma = morphisms_[static_cast<size_t>(a)];
    const auto& outs = out_[static_cast<size_t>(ma.dst)];
    for (size_t p = 0; p < outs.size(); ++p) {
      const int b = outs[p];
      const int r = compose_fn(a, b);
      if (r < 0 || r >= nmor) {
        throw Error("composite of " + quoted(ma.tag) + " and " +
                    quoted(morphisms_[static_cast<size_t>(b)].tag) +
                    " is not a listed morphism");
      }
      const Morphism& mr = morphisms_[static_cast<size_t>(r)];
      if (mr.src != ma.src || mr.dst != morphisms_[static_cast<size_t>(b)].dst) {
        throw Error("composite of " + quoted(ma.tag) + " and " +
                    quoted(morphisms_[static_cast<size_t>(b)].tag) +
                    " lands on the wrong endpoints");
      }
      comp_[offset_[static_cast<size_t>(a)] + p] = r;
    }
  }
  audit();
}

void SmallCategory::audit() const {
  const int nmor = morphism_count();
  for (int m = 0; m < nmor; ++m) {
    const Morphism& mm = morphisms_[static_cast<size_t>(m)];
    const int ls = identities_[static_cast<size_t>(mm.src)];
    const int rd = identities_[static_cast<size_t>(mm.dst)];
    if (comp_[offset_[static_cast<size_t>(ls)] +
              static_cast<size_t>(pos_in_out_[static_cast<size_t>(m)])] != m) {
      throw Error("left unit law fails at morphism " + quoted(mm.tag));
    }
    if (comp_[offset_[static_cast<size_t>(m)] +
              static_cast<size_t>(pos_in_out_[static_cast<size_t>(rd)])] != m) {
      throw Error("right unit law fails at morphism " + quoted(mm.tag));
    }
  }

  // Associativity over every composable triple.  The middle morphism is
  // fixed first so that both bracketings reduce to single array reads:
  // left[i] already holds ins[i];m2, and p23 locates m2;m3 inside each
  // incoming morphism's result segment.
  std::vector<int> left;
  for (int m2 = 0; m2 < nmor; ++m2) {
    const Morphism& mid = morphisms_[static_cast<size_t>(m2)];
    const auto& ins = in_[static_cast<size_t>(mid.src)];
    const auto& outs = out_[static_cast<size_t>(mid.dst)];
    if (ins.empty() || outs.empty()) continue;
    left.resize(ins.size());
    const size_t p2 = static_cast<size_t>(pos_in_out_[static_cast<size_t>(m2)]);
    for (size_t i = 0; i < ins.size(); ++i) {
      left[i] = comp_[offset_[static_cast<size_t>(ins[i])] + p2];
    }
    for (const int m3 : outs) {
      const int m23 = comp_[offset_[static_cast<size_t>(m2)] +
                            static_cast<size_t>(pos_in_out_[static_cast<size_t>(m3)])];
      const size_t p3 = static_cast<size_t>(pos_in_out_[static_cast<size_t>(m3)]);
      const size_t p23 = static_cast<size_t>(pos_in_out_[static_cast<size_t>(m23)]);
      for (size_t i = 0; i < ins.size(); ++i) {
        if (comp_[offset_[static_cast<size_t>(left[i])] + p3] !=
            comp_[offset_[static_cast<size_t>(ins[i])] + p23]) {
          throw Error("associativity fails at " +
                      quoted(morphisms_[static_cast<size_t>(ins[i])].tag) +
                      " ; " + quoted(mid.tag) + " ; " +
                      quoted(morphisms_[static_cast<size_t>(m3)].tag));
        }
      }
    }
  }
}

const std::string& SmallCategory::object(int i) const {
  if (i < 0 || i >= object_count()) {
    throw Error("object index " + std::to_string(i) + " out of range");
  }
  return objects_[static_cast<size_t>(i)];
}

const SmallCategory::Morphism& SmallCategory::morphism(int i) const {
  if (i < 0 || i >= morphism_count()) {
    throw Error("morphism index " + std::to_string(i) + " out of range");
  }
  return morphisms_[static_cast<size_t>(i)];
}

int SmallCategory::identity(int object) const {
  if (object < 0 || object >= object_count()) {
    throw Error("object index " + std::to_string(object) + " out of range");
  }
  return identities_[static_cast<size_t>(object)];
}

bool SmallCategory::composable(int a, int b) const {
  return morphism(a).dst == morphism(b).src;
}

int SmallCategory::compose(int a, int b) const {
  const Morphism& ma = morphism(a);
  const Morphism& mb = morphism(b);
  if (ma.dst != mb.src) {
    throw Error("morphisms " + quoted(ma.tag) + " and " + quoted(mb.tag) +
                " do not compose");
  }
  return comp_[offset_[static_cast<size_t>(a)] +
               static_cast<size_t>(pos_in_out_[static_cast<size_t>(b)])];
}

const std::vector<int>& SmallCategory::out_of(int object) const {
  if (object < 0 || object >= object_count()) {
    throw Error("object index " + std::to_string(object) + " out of range");
  }
  return out_[static_cast<size_t>(object)];
}

const std::vector<int>& SmallCategory::into(int object) const {
  if (object < 0 || object >= object_count()) {
    throw Error("object index " + std::to_string(object) + " out of range");
  }
  return in_[static_cast<size_t>(object)];
}

Report verify_functor(const CatFunctor& f) {
  Report rep;
  const SmallCategory& a = *f.src;
  const SmallCategory& b = *f.dst;

  bool covered = static_cast<int>(f.object_map.size()) == a.object_count() &&
                 static_cast<int>(f.morphism_map.size()) == a.morphism_count();
  if (covered) {
    for (const int x : f.object_map) {
      if (x < 0 || x >= b.object_count()) covered = false;
    }
    for (const int m : f.morphism_map) {
      if (m < 0 || m >= b.morphism_count()) covered = false;
    }
  }
  rep.add("tables cover the source category", covered);
  if (!covered) return rep;

  bool ends = true;
  std::string ends_detail;
  for (int m = 0; m < a.morphism_count() && ends; ++m) {
    const auto& mm = a.morphism(m);
    const auto& im = b.morphism(f.morphism_map[static_cast<size_t>(m)]);
    if (im.src != f.object_map[static_cast<size_t>(mm.src)] ||
        im.dst != f.object_map[static_cast<size_t>(mm.dst)]) {
      ends = false;
      ends_detail = "image of " + quoted(mm.tag) + " has the wrong endpoints";
    }
  }
  rep.add("images keep their endpoints", ends, ends_detail);
  // With stray endpoints the remaining laws are not even well posed: the
  // image of a composable pair need not compose.
  if (!ends) return rep;

  bool ids = true;
  std::string ids_detail;
  for (int x = 0; x < a.object_count() && ids; ++x) {
    if (f.morphism_map[static_cast<size_t>(a.identity(x))] !=
        b.identity(f.object_map[static_cast<size_t>(x)])) {
      ids = false;
      ids_detail = "identity of " + quoted(a.object(x)) + " is not preserved";
    }
  }
  rep.add("identities map to identities", ids, ids_detail);

  bool comp = true;
  std::string comp_detail;
  for (int m1 = 0; m1 < a.morphism_count() && comp; ++m1) {
    for (const int m2 : a.out_of(a.morphism(m1).dst)) {
      if (f.morphism_map[static_cast<size_t>(a.compose(m1, m2))] !=
          b.compose(f.morphism_map[static_cast<size_t>(m1)],
                    f.morphism_map[static_cast<size_t>(m2)])) {
        comp = false;
        comp_detail = "breaks at " + quoted(a.morphism(m1).tag) + " ; " +
                      quoted(a.morphism(m2).tag);
        break;
      }
    }
  }
  rep.add("composition is preserved", comp, comp_detail);
  return rep;
}

bool is_faithful(const CatFunctor& f) {
  const SmallCategory& a = *f.src;
  if (static_cast<int>(f.morphism_map.size()) != a.morphism_count()) {
    throw Error("morphism table does not cover the source category");
  }
  std::vector<std::array<int, 3>> sig;
  sig.reserve(f.morphism_map.size());
  for (int m = 0; m < a.morphism_count(); ++m) {
    const auto& mm = a.morphism(m);
    sig.push_back({mm.src, mm.dst, f.morphism_map[static_cast<size_t>(m)]});
  }
  std::sort(sig.begin(), sig.end());
  return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
}

CatFunctor compose_functors(const CatFunctor& a, const CatFunctor& b) {
  if (a.dst != b.src) {
    throw Error("functors do not chain: the first must end where the second starts");
  }
  CatFunctor out{a.src, b.dst, {}, {}};
  out.object_map.reserve(a.object_map.size());
  for (const int x : a.object_map) {
    out.object_map.push_back(b.object_map[static_cast<size_t>(x)]);
  }
  out.morphism_map.reserve(a.morphism_map.size());
  for (const int m : a.morphism_map) {
    out.morphism_map.push_back(b.morphism_map[static_cast<size_t>(m)]);
  }
  return out;
}

SmallCategory delooping(const Context& ctx) {
  const RelMonoid& mon = ctx.monoid;
  std::vector<SmallCategory::Morphism> morphisms;
  morphisms.reserve(static_cast<size_t>(mon.size()));
  for (int g = 0; g < mon.size(); ++g) {
    morphisms.push_back({0, 0, mon.canonical_word(g)});
  }
  return SmallCategory({"*"}, std::move(morphisms), {0},
                       [&mon](int a, int b) { return mon.product(a, b); });
}

struct Grothendieck::Parts {
  std::vector<std::string> objects;
  std::vector<SmallCategory::Morphism> morphisms;
  std::vector<int> identities;
  std::vector<int> lookup;
  std::vector<int> element_of;
  std::vector<int> src_point;
  std::vector<int> dst_point;
};

Grothendieck::Parts Grothendieck::enumerate(const Context& ctx) {
  const RelMonoid& mon = ctx.monoid;
  const FiniteSetPtr& carrier = mon.generators().carrier();
  const int n = carrier->size();
  const int elements = mon.size();

  if (!mon.element(0).includes(Relation::identity(carrier))) {
    throw Error("context " + quoted(ctx.name) +
                " gives its identity element no loop at some point, so the "
                "triple category would lack identities");
  }

  Parts p;
  p.objects.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.objects.push_back(carrier->label(i));

  p.lookup.assign(static_cast<size_t>(n) * static_cast<size_t>(elements) *
                      static_cast<size_t>(n),
                  -1);
  for (int g = 0; g < elements; ++g) {
    const std::string word = mon.canonical_word(g);
    for (const auto& [s, s2] : mon.element(g).pairs()) {
      const int id = static_cast<int>(p.morphisms.size());
      p.lookup[(static_cast<size_t>(s) * static_cast<size_t>(elements) +
                static_cast<size_t>(g)) *
                   static_cast<size_t>(n) +
               static_cast<size_t>(s2)] = id;
      p.morphisms.push_back({s, s2, word});
      p.element_of.push_back(g);
      p.src_point.push_back(s);
      p.dst_point.push_back(s2);
    }
  }
  p.identities.resize(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    p.identities[static_cast<size_t>(s)] =
        p.lookup[(static_cast<size_t>(s) * static_cast<size_t>(elements)) *
                     static_cast<size_t>(n) +
                 static_cast<size_t>(s)];
  }
  return p;
}

SmallCategory Grothendieck::build_category(const Context& ctx, Parts& parts,
                                           const std::vector<int>& lookup) {
  const RelMonoid& mon = ctx.monoid;
  const int n = mon.generators().carrier()->size();
  const int elements = mon.size();
  const std::vector<int>& element_of = parts.element_of;
  const std::vector<int>& src_point = parts.src_point;
  const std::vector<int>& dst_point = parts.dst_point;
  const auto compose_fn = [&, n, elements](int a, int b) {
    const int g = mon.product(element_of[static_cast<size_t>(a)],
                              element_of[static_cast<size_t>(b)]);
    return lookup[(static_cast<size_t>(src_point[static_cast<size_t>(a)]) *
                       static_cast<size_t>(elements) +
                   static_cast<size_t>(g)) *
                      static_cast<size_t>(n) +
                  static_cast<size_t>(dst_point[static_cast<size_t>(b)])];
  };
  return SmallCategory(std::move(parts.objects), std::move(parts.morphisms),
                       std::move(parts.identities), compose_fn);
}

Grothendieck::Grothendieck(const Context& ctx)
    : Grothendieck(ctx, enumerate(ctx)) {}

Grothendieck::Grothendieck(const Context& ctx, Parts&& parts)
    : ctx_(&ctx),
      lookup_(std::move(parts.lookup)),
      category_(build_category(ctx, parts, lookup_)),
      base_(delooping(ctx)),
      projection_{&category_, &base_,
                  std::vector<int>(
                      static_cast<size_t>(category_.object_count()), 0),
                  std::move(parts.element_of)} {}

int Grothendieck::element_of(int morphism) const {
  if (morphism < 0 || morphism >= category_.morphism_count()) {
    throw Error("morphism index " + std::to_string(morphism) + " out of range");
  }
  return projection_.morphism_map[static_cast<size_t>(morphism)];
}

int Grothendieck::triple_id(int s, int g, int s2) const {
  const int n = category_.object_count();
  const int elements = base_.morphism_count();
  if (s < 0 || s >= n || s2 < 0 || s2 >= n) {
    throw Error("carrier point out of range in triple lookup");
  }
  if (g < 0 || g >= elements) {
    throw Error("monoid element out of range in triple lookup");
  }
  return lookup_[(static_cast<size_t>(s) * static_cast<size_t>(elements) +
                  static_cast<size_t>(g)) *
                     static_cast<size_t>(n) +
                 static_cast<size_t>(s2)];
}

std::vector<Relation> from_faithful(const CatFunctor& k, const Context& ctx) {
  const SmallCategory& source = *k.src;
  const SmallCategory& target = *k.dst;
  const RelMonoid& mon = ctx.monoid;

  if (target.object_count() != 1 ||
      target.morphism_count() != mon.size() || target.identity(0) != 0) {
    throw Error("from_faithful: the codomain is not the one-object category "
                "of context " + quoted(ctx.name));
  }
  for (int a = 0; a < mon.size(); ++a) {
    for (int b = 0; b < mon.size(); ++b) {
      if (target.compose(a, b) != mon.product(a, b)) {
        throw Error("from_faithful: the codomain does not multiply like "
                    "context " + quoted(ctx.name));
      }
    }
  }
  if (static_cast<int>(k.object_map.size()) != source.object_count() ||
      static_cast<int>(k.morphism_map.size()) != source.morphism_count()) {
    throw Error("from_faithful: the functor's tables do not cover its source");
  }
  if (!is_faithful(k)) {
    throw Error("from_faithful: the functor merges parallel morphisms; only "
                "faithful functors encode relation data");
  }

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(source.object_count()));
  for (int i = 0; i < source.object_count(); ++i) {
    names.push_back(source.object(i));
  }
  const FiniteSetPtr points = make_set("K", std::move(names));

  std::vector<std::vector<std::pair<int, int>>> fibers(
      static_cast<size_t>(mon.size()));
  for (int m = 0; m < source.morphism_count(); ++m) {
    const auto& mm = source.morphism(m);
    fibers[static_cast<size_t>(k.morphism_map[static_cast<size_t>(m)])]
        .push_back({mm.src, mm.dst});
  }
  std::vector<Relation> out;
  out.reserve(fibers.size());
  for (const auto& pairs : fibers) {
    out.push_back(Relation::from_pairs(points, points, pairs));
  }
  return out;
}

CatFunctor lift_morphism(const DiagramMorphism& d, const Grothendieck& src,
                         const Grothendieck& dst) {
  const RelMonoid& smon = src.context().monoid;
  const RelMonoid& dmon = dst.context().monoid;
  if (&d.hom.domain() != &smon || &d.hom.codomain() != &dmon) {
    throw Error("lift_morphism: the monoid map does not run between the two "
                "contexts");
  }
  const FiniteSetPtr& scar = smon.generators().carrier();
  const FiniteSetPtr& dcar = dmon.generators().carrier();
  if (!d.lambda.src()->same_elements(*scar) ||
      !d.lambda.dst()->same_elements(*dcar)) {
    throw Error("lift_morphism: lambda must run from the source carrier to "
                "the target carrier");
  }
  if (!d.lambda.is_function()) {
    throw Error("lift_morphism: lambda must be a function");
  }
  for (int g = 0; g < smon.size(); ++g) {
    const Relation reached = smon.element(g).compose(d.lambda);
    const Relation allowed = d.lambda.compose(dmon.element(d.hom.apply(g)));
    if (!allowed.includes(reached)) {
      const auto witness = reached.difference(allowed).pairs().front();
      throw Error("lift_morphism: naturality fails at element " +
                  smon.canonical_word(g) + " starting from " +
                  scar->label(witness.first));
    }
  }

  const int n = scar->size();
  std::vector<int> image(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    image[static_cast<size_t>(s)] = d.lambda.image_of(s).front();
  }

  std::vector<int> morphism_map(
      static_cast<size_t>(src.category().morphism_count()));
  for (int m = 0; m < src.category().morphism_count(); ++m) {
    const auto& mm = src.category().morphism(m);
    const int r = dst.triple_id(image[static_cast<size_t>(mm.src)],
                                d.hom.apply(src.element_of(m)),
                                image[static_cast<size_t>(mm.dst)]);
    if (r < 0) {
      throw Error("lift_morphism: the image of " + quoted(mm.tag) +
                  " is missing from the target category");
    }
    morphism_map[static_cast<size_t>(m)] = r;
  }
  CatFunctor out{&src.category(), &dst.category(), std::move(image),
                 std::move(morphism_map)};

  for (int m = 0; m < src.category().morphism_count(); ++m) {
    if (dst.element_of(out.morphism_map[static_cast<size_t>(m)]) !=
        d.hom.apply(src.element_of(m))) {
      throw Error("lift_morphism: projecting the lift disagrees with the "
                  "monoid map at " + quoted(src.category().morphism(m).tag));
    }
  }
  return out;
}

}  // namespace pkn
