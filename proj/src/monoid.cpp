// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#include "pkn/monoid.hpp"

#include <algorithm>
#include <cctype>

#include "pkn/error.hpp"

namespace pkn {

GeneratorSet::GeneratorSet(FiniteSetPtr carrier, std::vector<Generator> gens)
    : carrier_(std::move(carrier)), gens_(std::move(gens)) {
  if (gens_.empty()) throw Error("generator set needs at least one generator");
  for (const auto& g : gens_) {
    if (g.name.size() != 1 || !std::isalpha(static_cast<unsigned char>(g.name[0])) ||
        g.name == "e") {
      throw Error("generator name '" + g.name +
                  "' must be a single letter other than 'e'");
    }
    if (!g.rel.src()->same_elements(*carrier_) ||
        !g.rel.dst()->same_elements(*carrier_)) {
      throw Error("generator '" + g.name + "' is not an endorelation on '" +
                  carrier_->name() + "'");
    }
  }
  for (size_t i = 0; i < gens_.size(); ++i) {
    for (size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i].name == gens_[j].name) {
        throw Error("duplicate generator name '" + gens_[i].name + "'");
      }
    }
  }
}

int GeneratorSet::find(char letter) const {
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name[0] == letter) return static_cast<int>(i);
  }
  return -1;
}

RelMonoid RelMonoid::generate(GeneratorSet g) {
  RelMonoid m(std::move(g));
  const auto& gens = m.gens_.generators();
  const int k = static_cast<int>(gens.size());

  m.elements_.push_back(Relation::identity(m.gens_.carrier()));
  m.words_.emplace_back();
  m.parent_.push_back(-1);
  m.via_.push_back(-1);
  m.index_.emplace(m.elements_[0], 0);

  // Breadth-first from the identity, multiplying on the right by the
  // generators in declared order.  Processing appended elements in order
  // makes the first word found for each element the canonical one.
  for (size_t i = 0; i < m.elements_.size(); ++i) {
    m.cayley_.emplace_back(static_cast<size_t>(k), -1);
    for (int gi = 0; gi < k; ++gi) {
      Relation r =
          m.elements_[i].compose(gens[static_cast<size_t>(gi)].rel);
      auto [it, inserted] =
          m.index_.emplace(std::move(r), static_cast<int>(m.elements_.size()));
      if (inserted) {
        m.elements_.push_back(it->first);
        m.words_.push_back(m.words_[i] + gens[static_cast<size_t>(gi)].name);
        m.parent_.push_back(static_cast<int>(i));
        m.via_.push_back(gi);
      }
      m.cayley_[i][static_cast<size_t>(gi)] = it->second;
    }
  }

  // Full multiplication table, by following each column's discovery edge:
  // if b was first reached as p * g then a*b = (a*p) * g.
  const int n = m.size();
  m.table_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a) {
    m.table_[static_cast<size_t>(a)][0] = a;
    for (int b = 1; b < n; ++b) {
      int via_parent = m.table_[static_cast<size_t>(a)][static_cast<size_t>(m.parent_[static_cast<size_t>(b)])];
      m.table_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          m.cayley_[static_cast<size_t>(via_parent)][static_cast<size_t>(m.via_[static_cast<size_t>(b)])];
    }
  }
  return m;
}

std::string RelMonoid::canonical_word(int i) const {
  return render_word(words_[static_cast<size_t>(i)]);
}

int RelMonoid::index_of(const Relation& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> RelMonoid::parse_word(const std::string& w) const {
  std::string s;
  for (char c : w) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s == "e") return {};
  std::vector<int> out;
  for (size_t p = 0; p < s.size();) {
    char c = s[p];
    if (c == '^') {
      if (out.empty()) throw Error("word '" + w + "': '^' without a letter");
      size_t q = p + 1;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      if (q == p + 1) throw Error("word '" + w + "': '^' without an exponent");
      int reps = std::stoi(s.substr(p + 1, q - p - 1));
      if (reps < 1) throw Error("word '" + w + "': exponent must be >= 1");
      out.insert(out.end(), static_cast<size_t>(reps - 1), out.back());
      p = q;
      continue;
    }
    int gi = gens_.find(c);
    if (gi < 0) {
      throw Error("word '" + w + "': unknown generator letter '" +
                  std::string(1, c) + "'");
    }
    out.push_back(gi);
    ++p;
  }
  return out;
}

int RelMonoid::evaluate_to_index(const std::string& w) const {
  int idx = 0;
  for (int gi : parse_word(w)) idx = cayley(idx, gi);
  return idx;
}

Relation RelMonoid::evaluate_word(const std::string& w) const {
  return element(evaluate_to_index(w));
}

std::string render_word(const std::string& letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < letters.size();) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out.push_back(letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool check_relator(const RelMonoid& m, const std::string& lhs,
                   const std::string& rhs) {
  return m.evaluate_to_index(lhs) == m.evaluate_to_index(rhs);
}

PresentationReport check_presentation(
    const RelMonoid& m, const std::vector<std::vector<std::string>>& relators) {
  PresentationReport report;
  report.all_hold = true;
  report.cardinality = m.size();
  for (const auto& words : relators) {
    if (words.size() < 2) {
      throw Error("a relator needs at least two words");
    }
    PresentationReport::Item item;
    for (const auto& w : words) {
      if (!item.equation.empty()) item.equation += " = ";
      item.equation += w;
    }
    int first = m.evaluate_to_index(words.front());
    item.holds = std::all_of(words.begin() + 1, words.end(),
                             [&](const std::string& w) {
                               return m.evaluate_to_index(w) == first;
                             });
    report.all_hold = report.all_hold && item.holds;
    report.items.push_back(std::move(item));
  }
  return report;
}

SubMonoid units(const RelMonoid& m) {
  const int n = m.size();
  SubMonoid sub;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (m.product(x, y) == 0 && m.product(y, x) == 0) {
        sub.elements.push_back(x);
        break;
      }
    }
  }
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (size_t p = 0; p < sub.elements.size(); ++p) {
    pos[static_cast<size_t>(sub.elements[p])] = static_cast<int>(p);
  }
  const int u = static_cast<int>(sub.elements.size());
  sub.table.assign(static_cast<size_t>(u), std::vector<int>(static_cast<size_t>(u), -1));
  for (int a = 0; a < u; ++a) {
    for (int b = 0; b < u; ++b) {
      int prod = m.product(sub.elements[static_cast<size_t>(a)],
                           sub.elements[static_cast<size_t>(b)]);
      int p = pos[static_cast<size_t>(prod)];
      if (p < 0) throw Error("units are not closed under product");
      sub.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = p;
    }
  }
  return sub;
}

MonoidMap MonoidMap::identity(const RelMonoid& m) {
  std::vector<int> images;
  for (int g = 0; g < m.generators().count(); ++g) {
    images.push_back(m.cayley(0, g));
  }
  std::vector<int> element_map(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) element_map[static_cast<size_t>(i)] = i;
  return MonoidMap(&m, &m, std::move(images), std::move(element_map));
}

std::optional<MonoidMap> MonoidMap::try_from_generator_images(
    const RelMonoid& dom, const RelMonoid& cod, std::vector<int> images) {
  if (static_cast<int>(images.size()) != dom.generators().count()) {
    throw Error("expected " + std::to_string(dom.generators().count()) +
                " generator images, got " + std::to_string(images.size()));
  }
  for (int img : images) {
    if (img < 0 || img >= cod.size()) {
      throw Error("generator image index " + std::to_string(img) +
                  " outside the codomain");
    }
  }
  const int n = dom.size();
  std::vector<int> f(static_cast<size_t>(n), -1);
  f[0] = 0;
  for (int i = 1; i < n; ++i) {
    f[static_cast<size_t>(i)] =
        cod.product(f[static_cast<size_t>(dom.parent(i))],
                    images[static_cast<size_t>(dom.via(i))]);
  }
  // The propagation fixes f on the discovery tree; homomorphism holds iff
  // every Cayley edge is respected (every element carries a witness word).
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < dom.generators().count(); ++g) {
      if (f[static_cast<size_t>(dom.cayley(i, g))] !=
          cod.product(f[static_cast<size_t>(i)], images[static_cast<size_t>(g)])) {
        return std::nullopt;
      }
    }
  }
  return MonoidMap(&dom, &cod, std::move(images), std::move(f));
}

MonoidMap MonoidMap::from_generator_images(const RelMonoid& dom,
                                           const RelMonoid& cod,
                                           std::vector<int> images) {
  auto m = try_from_generator_images(dom, cod, std::move(images));
  if (!m) {
    throw Error("generator images do not extend to a monoid homomorphism");
  }
  return *m;
}

bool MonoidMap::is_isomorphism() const {
  if (dom_->size() != cod_->size()) return false;
  std::vector<bool> seen(element_map_.size(), false);
  for (int v : element_map_) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

MonoidMap MonoidMap::then(const MonoidMap& next) const {
  if (cod_ != next.dom_) {
    throw Error("monoid map composition: codomain/domain mismatch");
  }
  std::vector<int> images;
  for (int img : gen_images_) images.push_back(next.apply(img));
  std::vector<int> element_map;
  for (int v : element_map_) element_map.push_back(next.apply(v));
  return MonoidMap(dom_, next.cod_, std::move(images), std::move(element_map));
}

std::vector<MonoidMap> automorphisms(const RelMonoid& m) {
  const int n = m.size();
  const int k = m.generators().count();
  std::vector<MonoidMap> found;
  std::vector<int> images(static_cast<size_t>(k), 0);
  // Odometer over all generator-image tuples, lexicographic.
  while (true) {
    auto map = MonoidMap::try_from_generator_images(m, m, images);
    if (map && map->is_isomorphism()) found.push_back(*map);
    int d = k - 1;
    while (d >= 0 && images[static_cast<size_t>(d)] == n - 1) {
      images[static_cast<size_t>(d)] = 0;
      --d;
    }
    if (d < 0) break;
    ++images[static_cast<size_t>(d)];
  }
  return found;
}

Table monoid_table(const RelMonoid& m) {
  Table t;
  for (int a = 0; a < m.size(); ++a) {
    t.emplace_back();
    for (int b = 0; b < m.size(); ++b) t.back().push_back(m.product(a, b));
  }
  return t;
}

Table automorphism_group_table(const std::vector<MonoidMap>& auts) {
  const int n = static_cast<int>(auts.size());
  Table t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      MonoidMap prod = auts[static_cast<size_t>(a)].then(auts[static_cast<size_t>(b)]);
      for (int c = 0; c < n; ++c) {
        if (auts[static_cast<size_t>(c)] == prod) {
          t[static_cast<size_t>(a)][static_cast<size_t>(b)] = c;
          break;
        }
      }
      if (t[static_cast<size_t>(a)][static_cast<size_t>(b)] < 0) {
        throw Error("automorphism set is not closed under composition");
      }
    }
  }
  return t;
}

Table cyclic_table(int n) {
  Table t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    }
  }
  return t;
}

Table dihedral_table(int order) {
  if (order < 2 || order % 2 != 0) {
    throw Error("dihedral order must be even and >= 2");
  }
  const int m = order / 2;
  // Indices 0..m-1 are the rotations p -> p+i of Z_m; m..2m-1 are the
  // reflections p -> i-p.  Products compose left-to-right (x then y).
  auto mul = [m](int x, int y) {
    bool xs = x >= m, ys = y >= m;
    int a = xs ? x - m : x, b = ys ? y - m : y;
    int v;
    if (!xs && !ys) v = (a + b) % m;              // rotation
    else if (!xs && ys) v = ((b - a) % m + m) % m;  // reflection
    else if (xs && !ys) v = (a + b) % m;          // reflection
    else v = ((b - a) % m + m) % m;               // rotation
    return (xs != ys ? m : 0) + v;
  };
  Table t(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = mul(a, b);
    }
  }
  return t;
}

Table direct_product_table(const Table& a, const Table& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  Table t(static_cast<size_t>(na * nb),
          std::vector<int>(static_cast<size_t>(na * nb)));
  for (int x = 0; x < na * nb; ++x) {
    for (int y = 0; y < na * nb; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          a[static_cast<size_t>(xa)][static_cast<size_t>(ya)] * nb +
          b[static_cast<size_t>(xb)][static_cast<size_t>(yb)];
    }
  }
  return t;
}

namespace {

// Per-element invariants preserved by any table isomorphism, used to prune
// the backtracking search.
struct TableSignature {
  int tail, cycle, products, square_roots;
  bool idempotent;

  friend bool operator==(const TableSignature&, const TableSignature&) = default;
};

std::vector<TableSignature> signatures(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<TableSignature> sigs;
  for (int x = 0; x < n; ++x) {
    TableSignature s{};
    // Power trajectory x, x^2, x^3, ... eventually cycles.
    std::vector<int> seen_at(static_cast<size_t>(n), -1);
    int cur = x, step = 0;
    while (seen_at[static_cast<size_t>(cur)] < 0) {
      seen_at[static_cast<size_t>(cur)] = step++;
      cur = t[static_cast<size_t>(cur)][static_cast<size_t>(x)];
    }
    s.tail = seen_at[static_cast<size_t>(cur)];
    s.cycle = step - s.tail;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (t[static_cast<size_t>(u)][static_cast<size_t>(v)] == x) ++s.products;
      }
      if (t[static_cast<size_t>(u)][static_cast<size_t>(u)] == x) ++s.square_roots;
    }
    s.idempotent = t[static_cast<size_t>(x)][static_cast<size_t>(x)] == x;
    sigs.push_back(s);
  }
  return sigs;
}

bool extend(const Table& a, const Table& b,
            const std::vector<TableSignature>& sa,
            const std::vector<TableSignature>& sb, std::vector<int>& f,
            std::vector<bool>& used, int next) {
  const int n = static_cast<int>(a.size());
  if (next == n) return true;
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<size_t>(img)] ||
        !(sa[static_cast<size_t>(next)] == sb[static_cast<size_t>(img)])) {
      continue;
    }
    f[static_cast<size_t>(next)] = img;
    used[static_cast<size_t>(img)] = true;
    bool ok = true;
    // Check all products among the assigned prefix whose result is also
    // assigned; everything gets rechecked as the prefix grows, so a full
    // assignment is a verified isomorphism.
    for (int x = 0; x <= next && ok; ++x) {
      for (int y = 0; y <= next && ok; ++y) {
        int z = a[static_cast<size_t>(x)][static_cast<size_t>(y)];
        if (z <= next) {
          ok = b[static_cast<size_t>(f[static_cast<size_t>(x)])]
                [static_cast<size_t>(f[static_cast<size_t>(y)])] ==
               f[static_cast<size_t>(z)];
        }
      }
    }
    if (ok && extend(a, b, sa, sb, f, used, next + 1)) return true;
    used[static_cast<size_t>(img)] = false;
    f[static_cast<size_t>(next)] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphic_tables(const Table& a,
                                                  const Table& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto sa = signatures(a);
  auto sb = signatures(b);
  // Cheap necessary condition: signature multisets must agree.
  auto key = [](const TableSignature& s) {
    return std::tuple(s.tail, s.cycle, s.products, s.square_roots, s.idempotent);
  };
  std::vector<std::tuple<int, int, int, int, bool>> ka, kb;
  for (const auto& s : sa) ka.push_back(key(s));
  for (const auto& s : sb) kb.push_back(key(s));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return std::nullopt;

  std::vector<int> f(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  if (extend(a, b, sa, sb, f, used, 0)) return f;
  return std::nullopt;
}

std::string cayley_dot(const RelMonoid& m) {
  // Involutions are drawn undirected, each with its own style, echoing the
  // usual hand-drawn convention for the P and L arrows.
  static const std::vector<std::pair<const char*, const char*>> involution_styles =
      {{"dotted", "blue"}, {"dashed", "green"}, {"dotted", "orange"},
       {"dashed", "purple"}};
  const int k = m.generators().count();
  std::vector<int> involution_ordinal(static_cast<size_t>(k), -1);
  int seen = 0;
  for (int g = 0; g < k; ++g) {
    int ge = m.cayley(0, g);
    if (m.product(ge, ge) == 0) involution_ordinal[static_cast<size_t>(g)] = seen++;
  }

  std::string out = "digraph cayley {\n";
  for (int i = 0; i < m.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + m.canonical_word(i) +
           "\"];\n";
  }
  for (int i = 0; i < m.size(); ++i) {
    for (int g = 0; g < k; ++g) {
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(m.cayley(i, g)) +
             " [label=\"" + m.generators().generators()[static_cast<size_t>(g)].name +
             "\"";
      int ord = involution_ordinal[static_cast<size_t>(g)];
      if (ord >= 0) {
        const auto& [style, color] =
            involution_styles[static_cast<size_t>(ord) % involution_styles.size()];
        out += std::string(", style=") + style + ", color=" + color +
               ", dir=none";
      } else {
        out += ", color=red";
      }
      out += "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace pkn
