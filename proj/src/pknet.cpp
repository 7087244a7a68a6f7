// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/pknet.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pkn/error.hpp"

namespace pkn {

namespace {

std::string arrow_name(const ThinCategory& shape, int a, int b) {
  return shape.object(a) + "->" + shape.object(b);
}

std::string pair_label(const Relation& r, std::pair<int, int> p) {
  return "(" + r.src()->label(p.first) + ", " + r.dst()->label(p.second) + ")";
}

// First pair of `inner` missing from `outer`, rendered with labels.
std::string first_missing(const Relation& inner, const Relation& outer) {
  return pair_label(inner, inner.difference(outer).pairs().front());
}

// Label of the first source point with an empty image, or "".
std::string untotal_witness(const Relation& r) {
  for (int x = 0; x < r.src()->size(); ++x) {
    if (r.image_of(x).empty()) return r.src()->label(x) + " unrelated";
  }
  return "";
}

}  // namespace

// ---------------------------------------------------------------------------
// ThinCategory

ThinCategory ThinCategory::ordinal(int n) {
  if (n < 1) throw Error("ordinal: need at least one object");
  ThinCategory t;
  for (int i = 0; i < n; ++i) t.objects_.push_back("X" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) t.covers_.push_back({i, i + 1});
  t.close_and_audit();
  return t;
}

ThinCategory ThinCategory::from_covers(
    std::vector<std::string> objects, std::vector<std::pair<int, int>> covers) {
  if (objects.empty()) throw Error("from_covers: need at least one object");
  ThinCategory t;
  t.objects_ = std::move(objects);
  t.covers_ = std::move(covers);
  std::set<std::string> names(t.objects_.begin(), t.objects_.end());
  if (names.size() != t.objects_.size()) {
    throw Error("from_covers: duplicate object names");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : t.covers_) {
    if (a < 0 || b < 0 || a >= t.size() || b >= t.size()) {
      throw Error("from_covers: cover endpoint out of range");
    }
    if (a == b) throw Error("from_covers: self-cover on " + t.objects_[a]);
    if (!seen.insert({a, b}).second) {
      throw Error("from_covers: duplicate cover " + arrow_name(t, a, b));
    }
  }
  t.close_and_audit();
  return t;
}

void ThinCategory::close_and_audit() {
  int n = size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq_[i][i] = true;
  for (auto [a, b] : covers_) leq_[a][b] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq_[k][j]) leq_[i][j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (leq_[i][j] && leq_[j][i]) {
        throw Error("not a partial order: " + objects_[i] + " and " +
                    objects_[j] + " sit on a cycle");
      }
    }
  }
}

const std::string& ThinCategory::object(int i) const {
  if (i < 0 || i >= size()) throw Error("object index out of range");
  return objects_[i];
}

int ThinCategory::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (objects_[i] == name) return i;
  }
  throw Error("unknown object \"" + name + "\"");
}

bool ThinCategory::leq(int a, int b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size()) {
    throw Error("object index out of range");
  }
  return leq_[a][b];
}

std::vector<std::pair<int, int>> ThinCategory::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (a != b && leq_[a][b]) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<std::vector<int>> ThinCategory::cover_paths(int a, int b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size()) {
    throw Error("object index out of range");
  }
  std::vector<std::vector<int>> out;
  if (!leq_[a][b]) return out;
  if (a == b) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> walk = [&](int at) {
    for (int ci = 0; ci < static_cast<int>(covers_.size()); ++ci) {
      if (covers_[ci].first != at) continue;
      int next = covers_[ci].second;
      if (!leq_[next][b]) continue;
      cur.push_back(ci);
      if (next == b) {
        out.push_back(cur);
      } else {
        walk(next);
      }
      cur.pop_back();
    }
  };
  walk(a);
  return out;
}

// ---------------------------------------------------------------------------
// FormFunctor

FormFunctor::FormFunctor(ThinCategory shape,
                         std::vector<FiniteSetPtr> object_sets,
                         std::vector<Relation> cover_relations)
    : shape_(std::move(shape)),
      sets_(std::move(object_sets)),
      cover_rels_(std::move(cover_relations)) {
  if (static_cast<int>(sets_.size()) != shape_.size()) {
    throw Error("form: need one object set per shape object");
  }
  for (int i = 0; i < shape_.size(); ++i) {
    if (!sets_[i] || sets_[i]->size() == 0) {
      throw Error("form: empty set on " + shape_.object(i));
    }
  }
  if (cover_rels_.size() != shape_.covers().size()) {
    throw Error("form: need one relation per covering arrow");
  }
  for (size_t ci = 0; ci < cover_rels_.size(); ++ci) {
    auto [a, b] = shape_.covers()[ci];
    const Relation& r = cover_rels_[ci];
    if (!r.src()->same_elements(*sets_[a]) ||
        !r.dst()->same_elements(*sets_[b])) {
      throw Error("form: relation endpoints disagree with the sets of " +
                  arrow_name(shape_, a, b));
    }
  }
}

const FiniteSetPtr& FormFunctor::object_set(int i) const {
  if (i < 0 || i >= static_cast<int>(sets_.size())) {
    throw Error("object index out of range");
  }
  return sets_[i];
}

void FormFunctor::set_relation(int a, int b, Relation r) {
  if (a == b || !shape_.leq(a, b)) {
    throw Error("set_relation: no non-identity arrow " +
                shape_.object(a) + "->" + shape_.object(b));
  }
  for (auto [x, y] : shape_.covers()) {
    if (x == a && y == b) {
      throw Error("set_relation: " + arrow_name(shape_, a, b) +
                  " is a covering arrow; pass its relation at construction");
    }
  }
  if (!r.src()->same_elements(*sets_[a]) ||
      !r.dst()->same_elements(*sets_[b])) {
    throw Error("set_relation: endpoints disagree with the sets of " +
                arrow_name(shape_, a, b));
  }
  explicit_.insert_or_assign({a, b}, std::move(r));
}

Relation FormFunctor::relation_on(int a, int b) const {
  if (!shape_.leq(a, b)) {
    throw Error("relation_on: no arrow " + shape_.object(a) + "->" +
                shape_.object(b));
  }
  if (a == b) return Relation::identity(sets_[a]);
  auto it = explicit_.find({a, b});
  if (it != explicit_.end()) return it->second;
  const auto& covers = shape_.covers();
  for (size_t ci = 0; ci < covers.size(); ++ci) {
    if (covers[ci].first == a && covers[ci].second == b) return cover_rels_[ci];
  }
  // Default composite: the union over all cover paths of the chain of
  // covering relations along the path.
  Relation acc = Relation::empty(sets_[a], sets_[b]);
  for (const auto& path : shape_.cover_paths(a, b)) {
    Relation leg = cover_rels_[path.front()];
    for (size_t k = 1; k < path.size(); ++k) {
      leg = leg.compose(cover_rels_[path[k]]);
    }
    acc = acc.union_with(leg);
  }
  return acc;
}

bool operator==(const FormFunctor& x, const FormFunctor& y) {
  if (x.shape_ != y.shape_ || x.cover_rels_ != y.cover_rels_ ||
      x.explicit_ != y.explicit_) {
    return false;
  }
  for (size_t i = 0; i < x.sets_.size(); ++i) {
    if (!x.sets_[i]->same_elements(*y.sets_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reports

void Report::add(const std::string& what, bool ok, const std::string& detail) {
  items.push_back({what, ok, detail});
  if (!ok) pass = false;
}

void Report::merge(const Report& other) {
  for (const Item& it : other.items) items.push_back(it);
  pass = pass && other.pass;
}

std::string Report::first_failure() const {
  for (const Item& it : items) {
    if (!it.ok) return it.what + (it.detail.empty() ? "" : ": " + it.detail);
  }
  return "ok";
}

// ---------------------------------------------------------------------------
// Verification

int label_element(const ThinCategory& shape, const RelMonoid& m,
                  const Labeling& lab, int a, int b) {
  if (!shape.leq(a, b)) {
    throw Error("label_element: no arrow " + shape.object(a) + "->" +
                shape.object(b));
  }
  if (a == b) return 0;
  if (lab.cover_words.size() != shape.covers().size()) {
    throw Error("labeling: need one word per covering arrow");
  }
  auto it = lab.composite_words.find({a, b});
  if (it != lab.composite_words.end()) return m.evaluate_to_index(it->second);
  // a < b in the closure of the covers, so at least one path exists.
  auto paths = shape.cover_paths(a, b);
  int acc = 0;
  for (int ci : paths.front()) {
    acc = m.product(acc, m.evaluate_to_index(lab.cover_words[ci]));
  }
  return acc;
}

Report verify_lax_functor(const FormFunctor& form) {
  const ThinCategory& shape = form.shape();
  Report rep;
  auto arrows = shape.arrows();
  for (auto [a, b] : arrows) {
    for (auto [b2, c] : arrows) {
      if (b2 != b) continue;
      Relation lhs = form.relation_on(a, b).compose(form.relation_on(b, c));
      Relation rhs = form.relation_on(a, c);
      bool ok = rhs.includes(lhs);
      rep.add("R(" + arrow_name(shape, a, b) + ");R(" +
                  arrow_name(shape, b, c) + ") within R(" +
                  arrow_name(shape, a, c) + ")",
              ok, ok ? "" : first_missing(lhs, rhs));
    }
  }
  return rep;
}

Report verify_labeling(const ThinCategory& shape, const Context& ctx,
                       const Labeling& lab) {
  const RelMonoid& m = ctx.monoid;
  if (lab.cover_words.size() != shape.covers().size()) {
    throw Error("labeling: need one word per covering arrow");
  }
  for (const auto& [key, word] : lab.composite_words) {
    (void)word;
    auto [a, b] = key;
    if (a == b || !shape.leq(a, b)) {
      throw Error("labeling: no non-identity arrow " + shape.object(a) +
                  "->" + shape.object(b));
    }
    for (auto [x, y] : shape.covers()) {
      if (x == a && y == b) {
        throw Error("labeling: " + arrow_name(shape, a, b) +
                    " is a covering arrow; its word belongs in cover_words");
      }
    }
  }
  Report rep;
  for (auto [a, b] : shape.arrows()) {
    std::vector<int> elems;
    for (const auto& path : shape.cover_paths(a, b)) {
      int acc = 0;
      for (int ci : path) {
        acc = m.product(acc, m.evaluate_to_index(lab.cover_words[ci]));
      }
      elems.push_back(acc);
    }
    auto it = lab.composite_words.find({a, b});
    if (it != lab.composite_words.end()) {
      elems.push_back(m.evaluate_to_index(it->second));
    }
    bool ok = true;
    for (int e : elems) ok = ok && e == elems.front();
    std::string detail;
    if (!ok) {
      std::set<std::string> words;
      for (int e : elems) words.insert(m.canonical_word(e));
      for (const std::string& w : words) {
        if (!detail.empty()) detail += " vs ";
        detail += w;
      }
    }
    rep.add("paths agree on " + arrow_name(shape, a, b), ok, detail);
  }
  return rep;
}

Report verify_lax_nat(const RelPKNet& net) {
  const ThinCategory& shape = net.shape();
  const RelMonoid& m = net.context->monoid;
  const FiniteSetPtr& carrier = m.generators().carrier();
  if (static_cast<int>(net.phi.components.size()) != shape.size()) {
    throw Error("phi: need one component per shape object");
  }
  for (int i = 0; i < shape.size(); ++i) {
    const Relation& c = net.phi.components[i];
    if (!c.src()->same_elements(*net.form.object_set(i)) ||
        !c.dst()->same_elements(*carrier)) {
      throw Error("phi: component endpoints disagree at " + shape.object(i));
    }
  }
  Report rep;
  for (int i = 0; i < shape.size(); ++i) {
    const Relation& c = net.phi.components[i];
    bool ok = c.is_left_total();
    rep.add("phi left-total at " + shape.object(i), ok,
            ok ? "" : untotal_witness(c));
  }
  for (auto [a, b] : shape.arrows()) {
    int el = label_element(shape, m, net.labeling, a, b);
    Relation lhs = net.form.relation_on(a, b).compose(net.phi.components[b]);
    Relation rhs = net.phi.components[a].compose(m.element(el));
    bool ok = rhs.includes(lhs);
    rep.add("naturality on " + arrow_name(shape, a, b) + " via " +
                m.canonical_word(el),
            ok, ok ? "" : first_missing(lhs, rhs));
  }
  return rep;
}

Report verify_pknet(const RelPKNet& net) {
  Report rep = verify_lax_functor(net.form);
  rep.merge(verify_labeling(net.shape(), *net.context, net.labeling));
  rep.merge(verify_lax_nat(net));
  return rep;
}

std::vector<Labeling> search_labelings(const FormFunctor& form,
                                       const LaxNatTrans& phi,
                                       const Context& ctx,
                                       bool functional_form) {
  const ThinCategory& shape = form.shape();
  int k = static_cast<int>(shape.covers().size());
  int n = ctx.monoid.size();
  const uint64_t kBudget = 1000000;
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<uint64_t>(n);
    if (total > kBudget) {
      throw Error("labeling search over " + std::to_string(n) + "^" +
                  std::to_string(k) + " candidates exceeds the budget of " +
                  std::to_string(kBudget));
    }
  }
  std::vector<Labeling> out;
  if (functional_form) {
    for (auto [a, b] : shape.arrows()) {
      if (!form.relation_on(a, b).is_function()) return out;
    }
  }
  // The form does not change across candidates; reject it once up front.
  if (!verify_lax_functor(form).pass) return out;
  std::vector<int> pick(k, 0);
  for (;;) {
    Labeling lab;
    for (int i = 0; i < k; ++i) {
      lab.cover_words.push_back(ctx.monoid.canonical_word(pick[i]));
    }
    RelPKNet net{form, &ctx, lab, phi};
    if (verify_pknet(net).pass) out.push_back(std::move(lab));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - 1) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homographies

namespace {

void check_wiring(const Homography& h) {
  if (h.src == nullptr || h.dst == nullptr) {
    throw Error("homography: missing context");
  }
  if (&h.hom.domain() != &h.src->monoid ||
      &h.hom.codomain() != &h.dst->monoid) {
    throw Error("homography: monoid map endpoints disagree with the contexts");
  }
  const FiniteSetPtr& sc = h.src->monoid.generators().carrier();
  const FiniteSetPtr& dc = h.dst->monoid.generators().carrier();
  if (!h.nu.src()->same_elements(*sc) || !h.nu.dst()->same_elements(*dc)) {
    throw Error("homography: nu endpoints disagree with the carriers");
  }
}

}  // namespace

RelPKNet apply_homography(const RelPKNet& net, const Homography& h) {
  check_wiring(h);
  if (&h.hom.domain() != &net.context->monoid) {
    throw Error("apply_homography: net context is not the map's domain");
  }
  const RelMonoid& sm = h.src->monoid;
  const RelMonoid& dm = h.dst->monoid;
  Labeling lab;
  for (const std::string& w : net.labeling.cover_words) {
    lab.cover_words.push_back(
        dm.canonical_word(h.hom.apply(sm.evaluate_to_index(w))));
  }
  for (const auto& [key, w] : net.labeling.composite_words) {
    lab.composite_words.emplace(
        key, dm.canonical_word(h.hom.apply(sm.evaluate_to_index(w))));
  }
  LaxNatTrans phi;
  for (const Relation& c : net.phi.components) {
    phi.components.push_back(c.compose(h.nu));
  }
  RelPKNet out{net.form, h.dst, std::move(lab), std::move(phi)};
  Report rep = verify_pknet(out);
  if (!rep.pass) {
    throw Error("apply_homography: the image net fails verification (" +
                rep.first_failure() + ")");
  }
  return out;
}

Report verify_homography(const RelPKNet& src, const RelPKNet& dst,
                         const Homography& h) {
  check_wiring(h);
  if (&h.hom.domain() != &src.context->monoid ||
      &h.hom.codomain() != &dst.context->monoid) {
    throw Error("verify_homography: contexts disagree with the map endpoints");
  }
  Report rep;
  bool shapes = src.shape() == dst.shape();
  rep.add("shapes equal", shapes, shapes ? "" : "shape mismatch");
  bool forms = shapes && src.form == dst.form;
  rep.add("form shared", forms, forms ? "" : "form mismatch");
  if (!shapes || !forms) return rep;
  const ThinCategory& shape = src.shape();
  if (static_cast<int>(src.phi.components.size()) != shape.size() ||
      static_cast<int>(dst.phi.components.size()) != shape.size()) {
    throw Error("verify_homography: phi components missing");
  }
  const RelMonoid& sm = src.context->monoid;
  const RelMonoid& dm = dst.context->monoid;
  for (auto [a, b] : shape.arrows()) {
    int want = h.hom.apply(label_element(shape, sm, src.labeling, a, b));
    int got = label_element(shape, dm, dst.labeling, a, b);
    bool ok = want == got;
    rep.add("relabel " + arrow_name(shape, a, b), ok,
            ok ? ""
               : "expected " + dm.canonical_word(want) + ", found " +
                     dm.canonical_word(got));
  }
  bool lt = h.nu.is_left_total();
  rep.add("nu left-total", lt, lt ? "" : untotal_witness(h.nu));
  // nu must be natural for every monoid element a label uses:
  // S(m);nu within nu;S'(N m).
  std::set<int> used;
  for (auto [a, b] : shape.arrows()) {
    used.insert(label_element(shape, sm, src.labeling, a, b));
  }
  for (int el : used) {
    Relation lhs = sm.element(el).compose(h.nu);
    Relation rhs = h.nu.compose(dm.element(h.hom.apply(el)));
    bool ok = rhs.includes(lhs);
    rep.add("nu naturality via " + sm.canonical_word(el), ok,
            ok ? "" : first_missing(lhs, rhs));
  }
  for (int i = 0; i < shape.size(); ++i) {
    Relation comp = src.phi.components[i].compose(h.nu);
    bool ok = dst.phi.components[i].includes(comp);
    rep.add("phi' includes nu.phi at " + shape.object(i), ok,
            ok ? "" : first_missing(comp, dst.phi.components[i]));
  }
  return rep;
}

bool is_isography(const Homography& h) {
  check_wiring(h);
  return h.hom.is_isomorphism() && h.nu.is_bijection();
}

Homography compose_homographies(const Homography& a, const Homography& b) {
  check_wiring(a);
  check_wiring(b);
  if (a.dst != b.src) {
    throw Error("compose_homographies: endpoints do not chain");
  }
  return Homography{a.src, b.dst, a.hom.then(b.hom), a.nu.compose(b.nu)};
}

bool homography_included(const Homography& a, const Homography& b) {
  check_wiring(a);
  check_wiring(b);
  if (a.src != b.src || a.dst != b.dst) {
    throw Error("homography_included: endpoints differ");
  }
  if (!(a.hom == b.hom)) {
    throw Error("homography_included: monoid maps differ");
  }
  return b.nu.includes(a.nu);
}

}  // namespace pkn
