// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pkn/chords.hpp"
#include "pkn/context.hpp"
#include "pkn/error.hpp"
#include "pkn/graphs.hpp"
#include "pkn/groth.hpp"
#include "pkn/monoid.hpp"
#include "pkn/pknet.hpp"
#include "pkn/relation.hpp"

namespace pkn::cli {
namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON ingestion: schema checks with pointer-style locations

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error("at " + where + ": " + msg);
}

void expect_object(const ordered_json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
}

void expect_array(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
}

std::string expect_string(const ordered_json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

int expect_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

const ordered_json& field(const ordered_json& j, const std::string& key,
                          const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing required field '" + key + "'");
  return *it;
}

void reject_unknown_keys(const ordered_json& j,
                         const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const auto& k : allowed) known = known || k == item.key();
    if (!known) fail(where, "unexpected field '" + item.key() + "'");
  }
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

// A carrier point by label, tolerating the alternate chord and pitch-class
// spellings ("FsM", "Ab", "3") on the two musical carriers.
int resolve_point(const FiniteSetPtr& set, const std::string& label) {
  if (auto i = set->find(label)) return *i;
  if (set->same_elements(*chords::universe())) {
    return chords::index_of(chords::parse_chord(label));
  }
  if (set->same_elements(*chords::pitch_classes())) {
    return chords::parse_pitch_class(label);
  }
  return set->index(label);  // throws, naming the set
}

std::string arrow_name(const ThinCategory& shape, int a, int b) {
  return shape.object(a) + "->" + shape.object(b);
}

// "X0->X1" into the pair of object indices of a non-identity arrow.
std::pair<int, int> parse_arrow_key(const ThinCategory& shape,
                                    const std::string& key,
                                    const std::string& where) {
  const auto pos = key.find("->");
  if (pos == std::string::npos) {
    fail(where, "arrow keys look like 'X0->X1'");
  }
  int a = -1;
  int b = -1;
  try {
    a = shape.index(key.substr(0, pos));
    b = shape.index(key.substr(pos + 2));
  } catch (const Error& e) {
    fail(where, e.what());
  }
  if (a == b) fail(where, "identity arrows carry no data");
  if (!shape.leq(a, b)) {
    fail(where, "'" + shape.object(a) + "' does not precede '" +
                    shape.object(b) + "' in the shape");
  }
  return {a, b};
}

ThinCategory load_shape(const ordered_json& j, const std::string& where) {
  expect_object(j, where);
  if (j.contains("kind")) {
    reject_unknown_keys(j, {"kind", "n"}, where);
    const std::string kind = expect_string(j["kind"], where + "/kind");
    if (kind != "ordinal") fail(where + "/kind", "unknown kind '" + kind + "'");
    const int n = expect_int(field(j, "n", where), where + "/n");
    if (n < 1) fail(where + "/n", "need at least one object");
    return ThinCategory::ordinal(n);
  }
  reject_unknown_keys(j, {"objects", "covers"}, where);
  const ordered_json& jo = field(j, "objects", where);
  expect_array(jo, where + "/objects");
  if (jo.empty()) fail(where + "/objects", "need at least one object");
  std::vector<std::string> objects;
  std::map<std::string, int> index;
  for (size_t i = 0; i < jo.size(); ++i) {
    const std::string name =
        expect_string(jo[i], where + "/objects/" + std::to_string(i));
    index.emplace(name, static_cast<int>(i));
    objects.push_back(name);
  }
  const ordered_json& jc = field(j, "covers", where);
  expect_array(jc, where + "/covers");
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < jc.size(); ++i) {
    const std::string at = where + "/covers/" + std::to_string(i);
    expect_array(jc[i], at);
    if (jc[i].size() != 2) fail(at, "a cover is a pair of object names");
    const std::string a = expect_string(jc[i][0], at + "/0");
    const std::string b = expect_string(jc[i][1], at + "/1");
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) fail(at + "/0", "unknown object '" + a + "'");
    if (ib == index.end()) fail(at + "/1", "unknown object '" + b + "'");
    covers.push_back({ia->second, ib->second});
  }
  try {
    return ThinCategory::from_covers(std::move(objects), std::move(covers));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

const Context& load_context_name(const ordered_json& j,
                                 const std::string& where) {
  const std::string name = expect_string(j, where);
  try {
    return context(name);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

RelPKNet parse_net(const ordered_json& j, bool need_labeling) {
  expect_object(j, "/");
  reject_unknown_keys(j, {"$schema", "shape", "context", "form", "labeling", "phi"},
                      "/");

  const ThinCategory shape = load_shape(field(j, "shape", "/"), "/shape");
  const Context& ctx = load_context_name(field(j, "context", "/"), "/context");
  const FiniteSetPtr& carrier = ctx.monoid.generators().carrier();

  // form.sets: one nonempty label list per shape object
  const ordered_json& jf = field(j, "form", "/");
  expect_object(jf, "/form");
  reject_unknown_keys(jf, {"sets", "arrows"}, "/form");
  const ordered_json& js = field(jf, "sets", "/form");
  expect_object(js, "/form/sets");
  for (const auto& item : js.items()) {
    bool known = false;
    for (int i = 0; i < shape.size(); ++i) known = known || shape.object(i) == item.key();
    if (!known) fail("/form/sets", "unknown object '" + item.key() + "'");
  }
  std::vector<FiniteSetPtr> sets;
  for (int i = 0; i < shape.size(); ++i) {
    const std::string& name = shape.object(i);
    if (!js.contains(name)) {
      fail("/form/sets", "missing set for object '" + name + "'");
    }
    const std::string at = "/form/sets/" + name;
    expect_array(js[name], at);
    if (js[name].empty()) fail(at, "sets must be nonempty");
    std::vector<std::string> labels;
    for (size_t k = 0; k < js[name].size(); ++k) {
      labels.push_back(
          expect_string(js[name][k], at + "/" + std::to_string(k)));
    }
    try {
      sets.push_back(make_set(name, std::move(labels)));
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  // form.arrows: relations for every cover, optionally for longer arrows
  const ordered_json& ja = field(jf, "arrows", "/form");
  expect_object(ja, "/form/arrows");
  std::vector<std::optional<Relation>> cover_rels(shape.covers().size());
  std::vector<std::tuple<int, int, Relation>> longer;
  for (const auto& item : ja.items()) {
    const std::string at = "/form/arrows/" + item.key();
    const auto [a, b] = parse_arrow_key(shape, item.key(), at);
    expect_array(item.value(), at);
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < item.value().size(); ++k) {
      const std::string pat = at + "/" + std::to_string(k);
      const ordered_json& pj = item.value()[k];
      expect_array(pj, pat);
      if (pj.size() != 2) fail(pat, "a related pair has two element labels");
      try {
        pairs.push_back(
            {sets[static_cast<size_t>(a)]->index(expect_string(pj[0], pat + "/0")),
             sets[static_cast<size_t>(b)]->index(expect_string(pj[1], pat + "/1"))});
      } catch (const Error& e) {
        fail(pat, e.what());
      }
    }
    const Relation rel = Relation::from_pairs(sets[static_cast<size_t>(a)],
                                              sets[static_cast<size_t>(b)], pairs);
    bool is_cover = false;
    for (size_t c = 0; c < shape.covers().size(); ++c) {
      if (shape.covers()[c] == std::pair<int, int>{a, b}) {
        cover_rels[c] = rel;
        is_cover = true;
      }
    }
    if (!is_cover) longer.push_back({a, b, rel});
  }
  std::vector<Relation> covers;
  for (size_t c = 0; c < cover_rels.size(); ++c) {
    if (!cover_rels[c]) {
      fail("/form/arrows",
           "missing relation for cover '" +
               arrow_name(shape, shape.covers()[c].first,
                          shape.covers()[c].second) +
               "'");
    }
    covers.push_back(*cover_rels[c]);
  }
  FormFunctor form(shape, sets, std::move(covers));
  for (auto& [a, b, rel] : longer) form.set_relation(a, b, std::move(rel));

  // labeling: a word per cover, optionally per longer arrow
  Labeling labeling;
  if (j.contains("labeling")) {
    const ordered_json& jl = j["labeling"];
    expect_object(jl, "/labeling");
    labeling.cover_words.assign(shape.covers().size(), "");
    std::vector<bool> seen(shape.covers().size(), false);
    for (const auto& item : jl.items()) {
      const std::string at = "/labeling/" + item.key();
      const auto [a, b] = parse_arrow_key(shape, item.key(), at);
      const std::string word = expect_string(item.value(), at);
      try {
        ctx.monoid.parse_word(word);
      } catch (const Error& e) {
        fail(at, e.what());
      }
      bool is_cover = false;
      for (size_t c = 0; c < shape.covers().size(); ++c) {
        if (shape.covers()[c] == std::pair<int, int>{a, b}) {
          labeling.cover_words[c] = word;
          seen[c] = true;
          is_cover = true;
        }
      }
      if (!is_cover) labeling.composite_words[{a, b}] = word;
    }
    for (size_t c = 0; c < seen.size(); ++c) {
      if (!seen[c]) {
        fail("/labeling", "missing word for cover '" +
                              arrow_name(shape, shape.covers()[c].first,
                                         shape.covers()[c].second) +
                              "'");
      }
    }
  } else if (need_labeling) {
    fail("/", "missing required field 'labeling'");
  }

  // phi: per object, the pairs (element, carrier point)
  const ordered_json& jp = field(j, "phi", "/");
  expect_object(jp, "/phi");
  for (const auto& item : jp.items()) {
    bool known = false;
    for (int i = 0; i < shape.size(); ++i) known = known || shape.object(i) == item.key();
    if (!known) fail("/phi", "unknown object '" + item.key() + "'");
  }
  std::vector<Relation> components;
  for (int i = 0; i < shape.size(); ++i) {
    const std::string& name = shape.object(i);
    if (!jp.contains(name)) {
      fail("/phi", "missing component for object '" + name + "'");
    }
    const std::string at = "/phi/" + name;
    expect_array(jp[name], at);
    std::vector<std::pair<int, int>> pairs;
    for (size_t k = 0; k < jp[name].size(); ++k) {
      const std::string pat = at + "/" + std::to_string(k);
      const ordered_json& pj = jp[name][k];
      expect_array(pj, pat);
      if (pj.size() != 2) fail(pat, "a phi pair has two labels");
      try {
        pairs.push_back(
            {sets[static_cast<size_t>(i)]->index(expect_string(pj[0], pat + "/0")),
             resolve_point(carrier, expect_string(pj[1], pat + "/1"))});
      } catch (const Error& e) {
        fail(pat, e.what());
      }
    }
    components.push_back(
        Relation::from_pairs(sets[static_cast<size_t>(i)], carrier, pairs));
  }

  return RelPKNet{std::move(form), &ctx, std::move(labeling),
                  LaxNatTrans{std::move(components)}};
}

RelPKNet load_net(const std::string& path, bool need_labeling) {
  const ordered_json j = load_json_file(path);
  try {
    return parse_net(j, need_labeling);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

Homography parse_homography(const ordered_json& j) {
  expect_object(j, "/");
  reject_unknown_keys(j, {"$schema", "context", "target", "images", "nu"}, "/");
  const Context& src = load_context_name(field(j, "context", "/"), "/context");
  const Context& dst = load_context_name(field(j, "target", "/"), "/target");

  const ordered_json& ji = field(j, "images", "/");
  expect_object(ji, "/images");
  const auto& gens = src.monoid.generators().generators();
  for (const auto& item : ji.items()) {
    bool known = false;
    for (const auto& g : gens) known = known || g.name == item.key();
    if (!known) fail("/images", "unknown generator '" + item.key() + "'");
  }
  std::vector<int> images;
  for (const auto& g : gens) {
    if (!ji.contains(g.name)) {
      fail("/images", "missing image for generator '" + g.name + "'");
    }
    const std::string at = "/images/" + g.name;
    const std::string word = expect_string(ji[g.name], at);
    try {
      images.push_back(dst.monoid.evaluate_to_index(word));
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }
  std::optional<MonoidMap> hom =
      MonoidMap::try_from_generator_images(src.monoid, dst.monoid, images);
  if (!hom) {
    fail("/images", "the generator images do not extend to a homomorphism");
  }

  const ordered_json& jn = field(j, "nu", "/");
  expect_array(jn, "/nu");
  const FiniteSetPtr& sc = src.monoid.generators().carrier();
  const FiniteSetPtr& dc = dst.monoid.generators().carrier();
  std::vector<std::pair<int, int>> pairs;
  for (size_t k = 0; k < jn.size(); ++k) {
    const std::string at = "/nu/" + std::to_string(k);
    expect_array(jn[k], at);
    if (jn[k].size() != 2) fail(at, "a nu pair has two carrier labels");
    try {
      pairs.push_back({resolve_point(sc, expect_string(jn[k][0], at + "/0")),
                       resolve_point(dc, expect_string(jn[k][1], at + "/1"))});
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }
  return Homography{&src, &dst, *std::move(hom),
                    Relation::from_pairs(sc, dc, pairs)};
}

Homography load_homography(const std::string& path) {
  const ordered_json j = load_json_file(path);
  try {
    return parse_homography(j);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

struct Progression {
  const Context* ctx;
  std::vector<int> points;
  std::vector<std::string> names;  // canonical carrier labels
};

Progression load_progression(const std::string& path) {
  const ordered_json j = load_json_file(path);
  try {
    expect_object(j, "/");
    reject_unknown_keys(j, {"$schema", "chords", "context"}, "/");
    const Context& ctx =
        load_context_name(field(j, "context", "/"), "/context");
    const ordered_json& jc = field(j, "chords", "/");
    expect_array(jc, "/chords");
    if (jc.empty()) fail("/chords", "need at least one chord");
    const FiniteSetPtr& carrier = ctx.monoid.generators().carrier();
    Progression p{&ctx, {}, {}};
    for (size_t k = 0; k < jc.size(); ++k) {
      const std::string at = "/chords/" + std::to_string(k);
      const std::string name = expect_string(jc[k], at);
      try {
        p.points.push_back(resolve_point(carrier, name));
      } catch (const Error& e) {
        fail(at, e.what());
      }
      p.names.push_back(carrier->label(p.points.back()));
    }
    return p;
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Emission

ordered_json report_json(const Report& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  ordered_json items = ordered_json::array();
  for (const auto& it : rep.items) {
    ordered_json item;
    item["what"] = it.what;
    item["ok"] = it.ok;
    item["detail"] = it.detail;
    items.push_back(std::move(item));
  }
  j["items"] = std::move(items);
  return j;
}

void report_text(std::ostream& os, const Report& rep) {
  for (const auto& it : rep.items) {
    os << (it.ok ? "ok " : "FAIL ") << it.what;
    if (!it.detail.empty()) os << " (" << it.detail << ")";
    os << "\n";
  }
  os << (rep.pass ? "pass" : "fail") << "\n";
}

ordered_json label_pairs(const Relation& r) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, b] : r.pairs()) {
    out.push_back(ordered_json::array(
        {r.src()->label(a), r.dst()->label(b)}));
  }
  return out;
}

ordered_json emit_net(const RelPKNet& net) {
  const ThinCategory& shape = net.shape();
  ordered_json j;

  ordered_json jshape;
  ordered_json objects = ordered_json::array();
  for (int i = 0; i < shape.size(); ++i) objects.push_back(shape.object(i));
  jshape["objects"] = std::move(objects);
  ordered_json covers = ordered_json::array();
  for (const auto& [a, b] : shape.covers()) {
    covers.push_back(ordered_json::array({shape.object(a), shape.object(b)}));
  }
  jshape["covers"] = std::move(covers);
  j["shape"] = std::move(jshape);

  j["context"] = net.context->name;

  ordered_json sets;
  for (int i = 0; i < shape.size(); ++i) {
    ordered_json labels = ordered_json::array();
    const FiniteSetPtr& s = net.form.object_set(i);
    for (int k = 0; k < s->size(); ++k) labels.push_back(s->label(k));
    sets[shape.object(i)] = std::move(labels);
  }
  ordered_json arrows;
  for (size_t c = 0; c < shape.covers().size(); ++c) {
    const auto& [a, b] = shape.covers()[c];
    arrows[arrow_name(shape, a, b)] = label_pairs(net.form.relation_on(a, b));
  }
  for (const auto& [key, rel] : net.form.explicit_relations()) {
    arrows[arrow_name(shape, key.first, key.second)] = label_pairs(rel);
  }
  ordered_json jform;
  jform["sets"] = std::move(sets);
  jform["arrows"] = std::move(arrows);
  j["form"] = std::move(jform);

  ordered_json labeling;
  for (size_t c = 0; c < shape.covers().size(); ++c) {
    const auto& [a, b] = shape.covers()[c];
    labeling[arrow_name(shape, a, b)] = net.labeling.cover_words[c];
  }
  for (const auto& [key, word] : net.labeling.composite_words) {
    labeling[arrow_name(shape, key.first, key.second)] = word;
  }
  j["labeling"] = std::move(labeling);

  ordered_json phi;
  for (int i = 0; i < shape.size(); ++i) {
    phi[shape.object(i)] = label_pairs(net.phi.components[static_cast<size_t>(i)]);
  }
  j["phi"] = std::move(phi);
  return j;
}

// "X0 = GM; X1 = Baug" for singleton cells, element->chord lists otherwise.
std::string phi_summary(const RelPKNet& net) {
  const ThinCategory& shape = net.shape();
  std::string out;
  for (int i = 0; i < shape.size(); ++i) {
    if (i > 0) out += "; ";
    out += shape.object(i) + " = ";
    const Relation& comp = net.phi.components[static_cast<size_t>(i)];
    const auto pairs = comp.pairs();
    if (net.form.object_set(i)->size() == 1 && pairs.size() == 1) {
      out += comp.dst()->label(pairs.front().second);
      continue;
    }
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (k > 0) out += ", ";
      out += comp.src()->label(pairs[k].first) + "->" +
             comp.dst()->label(pairs[k].second);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_monoid(const std::string& preset, bool with_relators, bool with_auts,
               bool with_units, bool with_dot, bool as_json,
               std::string& payload) {
  const Context& ctx = context(preset);
  const RelMonoid& m = ctx.monoid;
  std::ostringstream os;
  ordered_json j;
  os << "elements: " << m.size() << "\n";
  j["preset"] = preset;
  j["elements"] = m.size();

  if (with_relators) {
    const PresentationReport rep = check_presentation(m, ctx.relators);
    os << "relators:\n";
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items) {
      os << "  " << it.equation << ": " << (it.holds ? "holds" : "FAILS")
         << "\n";
      ordered_json item;
      item["equation"] = it.equation;
      item["holds"] = it.holds;
      items.push_back(std::move(item));
    }
    j["relators"] = std::move(items);
  }

  if (with_auts) {
    const std::vector<MonoidMap> auts = automorphisms(m);
    const bool d6z2 =
        isomorphic_tables(automorphism_group_table(auts),
                          direct_product_table(dihedral_table(6),
                                               cyclic_table(2)))
            .has_value();
    os << "automorphisms: " << auts.size();
    if (d6z2) os << " (D6 x Z2)";
    os << "\n";
    ordered_json images = ordered_json::array();
    const auto& gens = m.generators().generators();
    for (const auto& aut : auts) {
      os << "  ";
      ordered_json one;
      for (size_t g = 0; g < gens.size(); ++g) {
        const std::string word = m.canonical_word(aut.generator_images()[g]);
        if (g > 0) os << ", ";
        os << gens[g].name << " -> " << word;
        one[gens[g].name] = word;
      }
      os << "\n";
      images.push_back(std::move(one));
    }
    ordered_json ja;
    ja["count"] = auts.size();
    ja["structure"] = d6z2 ? ordered_json("D6 x Z2") : ordered_json(nullptr);
    ja["images"] = std::move(images);
    j["automorphisms"] = std::move(ja);
  }

  if (with_units) {
    const SubMonoid u = units(m);
    os << "units: " << u.elements.size() << "\n";
    ordered_json elems = ordered_json::array();
    ordered_json table = ordered_json::array();
    for (size_t a = 0; a < u.elements.size(); ++a) {
      os << "  " << m.canonical_word(u.elements[a]) << ":";
      elems.push_back(m.canonical_word(u.elements[a]));
      ordered_json row = ordered_json::array();
      for (size_t b = 0; b < u.elements.size(); ++b) {
        const std::string word =
            m.canonical_word(u.elements[static_cast<size_t>(u.table[a][b])]);
        os << " " << word;
        row.push_back(word);
      }
      os << "\n";
      table.push_back(std::move(row));
    }
    ordered_json ju;
    ju["count"] = u.elements.size();
    ju["elements"] = std::move(elems);
    ju["table"] = std::move(table);
    j["units"] = std::move(ju);
  }

  if (with_dot) {
    const std::string dot = cayley_dot(m);
    os << dot;
    j["dot"] = dot;
  }

  payload = as_json ? j.dump(2) + "\n" : os.str();
  return 0;
}

int cmd_graph(const std::string& kind, bool with_dot,
              const std::vector<std::string>& distance, bool as_json,
              std::string& payload) {
  const graphs::ParsimoniousGraph g =
      kind == "cube-dance" ? graphs::cube_dance() : graphs::weitzmann();
  std::ostringstream os;
  ordered_json j;
  j["graph"] = kind;
  j["vertices"] = g.vertices->size();
  j["edges"] = graphs::edge_count(g);
  int code = 0;
  bool printed = false;

  if (!distance.empty()) {
    const int a = resolve_point(g.vertices, distance[0]);
    const int b = resolve_point(g.vertices, distance[1]);
    ordered_json jd;
    jd["from"] = g.vertices->label(a);
    jd["to"] = g.vertices->label(b);
    const auto r = graphs::graph_distance(g, a, b);
    if (!r) {
      os << "unreachable\n";
      jd["reachable"] = false;
      code = 1;
    } else {
      os << r->distance << ":";
      ordered_json path = ordered_json::array();
      for (const int v : r->path) {
        os << " " << g.vertices->label(v);
        path.push_back(g.vertices->label(v));
      }
      os << "\n";
      jd["reachable"] = true;
      jd["distance"] = r->distance;
      jd["path"] = std::move(path);
    }
    j["distance"] = std::move(jd);
    printed = true;
  }
  if (with_dot) {
    const std::string dot = graphs::graph_dot(g);
    os << dot;
    j["dot"] = dot;
    printed = true;
  }
  if (!printed) {
    os << "vertices: " << g.vertices->size() << "\n"
       << "edges: " << graphs::edge_count(g) << "\n";
  }
  payload = as_json ? j.dump(2) + "\n" : os.str();
  return code;
}

std::vector<std::string> relating_words(const RelMonoid& m, int a, int b) {
  std::vector<std::string> words;
  for (int i = 0; i < m.size(); ++i) {
    if (m.element(i).contains(a, b)) words.push_back(m.canonical_word(i));
  }
  return words;
}

int cmd_relate(const std::string& from, const std::string& to,
               const std::string& preset, bool as_json, std::string& payload) {
  const Context& ctx = context(preset);
  const FiniteSetPtr& carrier = ctx.monoid.generators().carrier();
  const int a = resolve_point(carrier, from);
  const int b = resolve_point(carrier, to);
  const std::vector<std::string> words = relating_words(ctx.monoid, a, b);

  ordered_json j;
  j["from"] = carrier->label(a);
  j["to"] = carrier->label(b);
  j["context"] = preset;
  j["words"] = words;

  std::string text;
  if (words.empty()) {
    text = "(none)\n";
  } else {
    for (size_t k = 0; k < words.size(); ++k) {
      text += (k ? ", " : "") + words[k];
    }
    text += "\n";
  }
  payload = as_json ? j.dump(2) + "\n" : text;
  return words.empty() ? 1 : 0;
}

int cmd_analyze(const std::string& path, bool as_json, std::string& payload) {
  const Progression prog = load_progression(path);
  const RelMonoid& m = prog.ctx->monoid;
  std::ostringstream os;
  ordered_json j;
  j["context"] = prog.ctx->name;
  j["chords"] = prog.names;
  ordered_json pairs = ordered_json::array();
  std::string first_unlabeled;
  for (size_t k = 0; k + 1 < prog.points.size(); ++k) {
    const std::vector<std::string> words =
        relating_words(m, prog.points[k], prog.points[k + 1]);
    const std::string head = prog.names[k] + " -> " + prog.names[k + 1];
    os << head << ": ";
    if (words.empty()) {
      os << "(none)";
      if (first_unlabeled.empty()) first_unlabeled = head;
    }
    for (size_t w = 0; w < words.size(); ++w) {
      os << (w ? ", " : "") << words[w];
    }
    os << "\n";
    ordered_json pj;
    pj["from"] = prog.names[k];
    pj["to"] = prog.names[k + 1];
    pj["words"] = words;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  j["pass"] = first_unlabeled.empty();
  if (first_unlabeled.empty()) {
    os << "pass\n";
  } else {
    os << "fail: no label for " << first_unlabeled << "\n";
    j["first_unlabeled"] = first_unlabeled;
  }
  payload = as_json ? j.dump(2) + "\n" : os.str();
  return first_unlabeled.empty() ? 0 : 1;
}

int cmd_pknet(const std::string& action, const std::string& net_path,
              const std::string& hom_path, bool functional, bool as_json,
              std::string& payload) {
  if (action == "verify") {
    const RelPKNet net = load_net(net_path, true);
    const Report rep = verify_pknet(net);
    std::ostringstream os;
    report_text(os, rep);
    payload = as_json ? report_json(rep).dump(2) + "\n" : os.str();
    return rep.pass ? 0 : 1;
  }

  if (action == "search") {
    const RelPKNet net = load_net(net_path, false);
    const std::vector<Labeling> found =
        search_labelings(net.form, net.phi, *net.context, functional);
    const ThinCategory& shape = net.shape();
    std::vector<std::string> cover_names;
    for (const auto& [a, b] : shape.covers()) {
      cover_names.push_back(arrow_name(shape, a, b));
    }
    ordered_json j;
    j["covers"] = cover_names;
    ordered_json jl = ordered_json::array();
    for (const auto& lab : found) jl.push_back(lab.cover_words);
    j["labelings"] = std::move(jl);

    std::ostringstream os;
    if (found.empty()) {
      os << "no labeling found\n";
    } else {
      os << "covers: ";
      for (size_t c = 0; c < cover_names.size(); ++c) {
        os << (c ? ", " : "") << cover_names[c];
      }
      os << "\nlabelings: " << found.size() << "\n";
      for (const auto& lab : found) {
        os << "  ";
        for (size_t c = 0; c < lab.cover_words.size(); ++c) {
          os << (c ? ", " : "") << lab.cover_words[c];
        }
        os << "\n";
      }
    }
    payload = as_json ? j.dump(2) + "\n" : os.str();
    return found.empty() ? 1 : 0;
  }

  // homography
  if (hom_path.empty()) {
    throw Error("pknet homography needs a net file and a homography file");
  }
  const RelPKNet net = load_net(net_path, true);
  const Homography h = load_homography(hom_path);
  if (h.src != net.context) {
    throw Error("the homography starts in context '" + h.src->name +
                "' but the net lives in '" + net.context->name + "'");
  }
  std::optional<RelPKNet> image;
  try {
    image.emplace(apply_homography(net, h));
  } catch (const Error& e) {
    ordered_json j;
    j["pass"] = false;
    j["error"] = e.what();
    payload = as_json ? j.dump(2) + "\n"
                      : "fail: " + std::string(e.what()) + "\n";
    return 1;
  }
  const Report rep = verify_homography(net, *image, h);
  std::ostringstream os;
  os << "phi': " << phi_summary(*image) << "\n"
     << "verify: " << (rep.pass ? "pass" : "fail") << "\n";
  ordered_json j;
  j["net"] = emit_net(*image);
  j["verify"] = report_json(rep);
  payload = as_json ? j.dump(2) + "\n" : os.str();
  return rep.pass ? 0 : 1;
}

int cmd_groth(const std::string& preset, bool as_json, std::string& payload) {
  const Context& ctx = context(preset);
  const Grothendieck g(ctx);
  const bool faithful = is_faithful(g.projection());
  bool roundtrip = faithful;
  if (faithful) {
    const std::vector<Relation> rels = from_faithful(g.projection(), ctx);
    for (int e = 0; e < ctx.monoid.size(); ++e) {
      roundtrip = roundtrip &&
                  rels[static_cast<size_t>(e)] == ctx.monoid.element(e);
    }
  }
  std::ostringstream os;
  os << "objects: " << g.category().object_count() << "\n"
     << "morphisms: " << g.category().morphism_count() << "\n"
     << "faithful: " << (faithful ? "true" : "false") << "\n"
     << "roundtrip: " << (roundtrip ? "true" : "false") << "\n";
  ordered_json j;
  j["context"] = preset;
  j["objects"] = g.category().object_count();
  j["morphisms"] = g.category().morphism_count();
  j["faithful"] = faithful;
  j["roundtrip"] = roundtrip;
  payload = as_json ? j.dump(2) + "\n" : os.str();
  return faithful && roundtrip ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"relational chord networks on the 28-chord universe", "pkn"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string outfile;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--output", outfile, "write the payload to this file");

  auto* mono = app.add_subcommand("monoid", "facts about a preset monoid");
  mono->fallthrough();
  std::string mono_preset;
  mono->add_option("preset", mono_preset, "one of upl, s, t, st, ti")
      ->required()
      ->check(CLI::IsMember({"upl", "s", "t", "st", "ti"}));
  bool with_relators = false;
  bool with_auts = false;
  bool with_units = false;
  bool mono_dot = false;
  mono->add_flag("--check-presentation", with_relators,
                 "verify the recorded relators");
  mono->add_flag("--automorphisms", with_auts,
                 "count automorphisms and list generator images");
  mono->add_flag("--units", with_units, "list the invertible elements");
  mono->add_flag("--dot", mono_dot, "emit the Cayley graph in DOT form");

  auto* graph = app.add_subcommand("graph", "parsimonious chord graphs");
  graph->fallthrough();
  std::string kind;
  graph->add_option("kind", kind, "cube-dance or weitzmann")
      ->required()
      ->check(CLI::IsMember({"cube-dance", "weitzmann"}));
  bool graph_dot_flag = false;
  std::vector<std::string> distance;
  graph->add_flag("--dot", graph_dot_flag, "emit the graph in DOT form");
  graph->add_option("--distance", distance,
                    "shortest path between two chords")
      ->expected(2);

  auto* relate = app.add_subcommand(
      "relate", "monoid elements relating two carrier points");
  relate->fallthrough();
  std::string from;
  std::string to;
  std::string relate_ctx;
  relate->add_option("from", from, "source chord")->required();
  relate->add_option("to", to, "target chord")->required();
  relate->add_option("--context", relate_ctx, "context preset")->required();

  auto* analyze =
      app.add_subcommand("analyze", "label a progression file pair by pair");
  analyze->fallthrough();
  std::string analyze_path;
  analyze->add_option("file", analyze_path, "progression JSON file")
      ->required();

  auto* pknet = app.add_subcommand("pknet", "verify, search, or transport a net");
  pknet->fallthrough();
  std::string action;
  std::string net_path;
  std::string hom_path;
  bool functional = false;
  pknet->add_option("action", action, "verify, search, or homography")
      ->required()
      ->check(CLI::IsMember({"verify", "search", "homography"}));
  pknet->add_option("net", net_path, "net JSON file")->required();
  pknet->add_option("homography", hom_path, "homography JSON file");
  pknet->add_flag("--functional", functional,
                  "restrict the search to functional forms");

  auto* groth = app.add_subcommand(
      "groth", "the triple category of a context, with its projection");
  groth->fallthrough();
  std::string groth_ctx;
  groth->add_option("--context", groth_ctx, "context preset")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string payload;
    int code = 0;
    if (mono->parsed()) {
      code = cmd_monoid(mono_preset, with_relators, with_auts, with_units,
                        mono_dot, as_json, payload);
    } else if (graph->parsed()) {
      code = cmd_graph(kind, graph_dot_flag, distance, as_json, payload);
    } else if (relate->parsed()) {
      code = cmd_relate(from, to, relate_ctx, as_json, payload);
    } else if (analyze->parsed()) {
      code = cmd_analyze(analyze_path, as_json, payload);
    } else if (pknet->parsed()) {
      code = cmd_pknet(action, net_path, hom_path, functional, as_json,
                       payload);
    } else if (groth->parsed()) {
      code = cmd_groth(groth_ctx, as_json, payload);
    }
    if (!outfile.empty()) {
      std::ofstream f(outfile, std::ios::binary);
      if (!f) {
        err << "error: cannot write '" << outfile << "'\n";
        return 2;
      }
      f << payload;
    } else {
      out << payload;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pkn::cli
