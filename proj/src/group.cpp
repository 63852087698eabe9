#include "atlas/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "atlas/error.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Element>> table)
    : name_(std::move(name)), order_(table.size()) {
  const std::size_t n = order_;
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty multiplication table");
  if (n > kMaxOrder) throw Error(ErrorKind::TooLarge, "group order exceeds 2^16");
  table_.resize(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(g) + " has wrong length");
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) throw Error(ErrorKind::NotAGroup, "entry out of range in row " + std::to_string(g));
      table_[g * n + h] = static_cast<std::uint16_t>(table[g][h]);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) throw Error(ErrorKind::NotAGroup, "element 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      Element x = mul(g, h);
      if (seen[x]) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(g) + " repeats an element");
      seen[x] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      Element x = mul(h, g);
      if (seen[x]) throw Error(ErrorKind::NotAGroup, "column " + std::to_string(g) + " repeats an element");
      seen[x] = 1;
    }
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw Error(ErrorKind::NotAGroup, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c) + ")");
    }
  };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x6574616c65ULL);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int k = 0; k < 200000; ++k) assoc(pick(rng), pick(rng), pick(rng));
  }
  inverse_.resize(n);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (mul(g, h) == 0) {
        if (mul(h, g) != 0) throw Error(ErrorKind::NotAGroup, "element " + std::to_string(g) + " has no two-sided inverse");
        inverse_[g] = h;
        break;
      }
    }
  }
  element_order_.resize(n);
  for (Element g = 0; g < n; ++g) {
    std::size_t k = 1;
    for (Element x = g; x != 0; x = mul(x, g)) ++k;
    element_order_[g] = k;
  }
  for (Element g = 0; g < n && abelian_; ++g)
    for (Element h = g + 1; h < n; ++h)
      if (mul(g, h) != mul(h, g)) {
        abelian_ = false;
        break;
      }
  std::uint64_t hash = 1469598103934665603ULL;
  for (std::uint16_t v : table_) {
    hash ^= v;
    hash *= 1099511628211ULL;
  }
  hash_ = hash;
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<std::int64_t>(element_order(a));
  Element x = 0;
  for (std::int64_t i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = 0; h < order_; ++h) out[g][h] = table_[g * order_ + h];
  return out;
}

GroupPtr make_group(std::string name, std::vector<std::vector<Element>> table) {
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(table));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->content_hash() == b->content_hash() && a->same_table(*b);
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(Element g) const { return std::binary_search(elements.begin(), elements.end(), g); }

std::optional<Element> Subgroup::local_index(Element g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return std::nullopt;
  return static_cast<Element>(it - elements.begin());
}

namespace {

GroupPtr induced_group(const FiniteGroup& parent, const std::vector<Element>& elements, std::string name) {
  std::vector<Element> local(parent.order(), kUnassigned);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(elements.size(), std::vector<Element>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) table[i][j] = local[parent.mul(elements[i], elements[j])];
  return make_group(std::move(name), std::move(table));
}

Subgroup subgroup_unchecked(GroupPtr parent, std::vector<Element> elements) {
  std::string name = parent->name() + ".sub" + std::to_string(elements.size());
  GroupPtr as_group = induced_group(*parent, elements, std::move(name));
  return Subgroup{std::move(parent), std::move(elements), std::move(as_group)};
}

// Closure of `start` (a subgroup given by generators) under multiplication
// by `gens`.  A set that outgrows |G|/2 can only be G (Lagrange).
std::vector<Element> close_under(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> list{0};
  in[0] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element s : gens) {
      Element x = g.mul(list[i], s);
      if (!in[x]) {
        in[x] = 1;
        list.push_back(x);
      }
    }
    if (list.size() * 2 > g.order()) {
      list.resize(g.order());
      std::iota(list.begin(), list.end(), 0u);
      return list;
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

}  // namespace

Subgroup make_subgroup(GroupPtr parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw Error(ErrorKind::NotAGroup, "subgroup must contain the identity");
  for (Element a : elements) {
    if (a >= parent->order()) throw Error(ErrorKind::NotAGroup, "subgroup element out of range");
    if (!std::binary_search(elements.begin(), elements.end(), parent->inv(a))) {
      throw Error(ErrorKind::NotAGroup, "subset is not closed under inverses");
    }
    for (Element b : elements)
      if (!std::binary_search(elements.begin(), elements.end(), parent->mul(a, b))) {
        throw Error(ErrorKind::NotAGroup, "subset is not closed under multiplication");
      }
  }
  return subgroup_unchecked(std::move(parent), std::move(elements));
}

Subgroup whole_group(GroupPtr g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0u);
  return subgroup_unchecked(std::move(g), std::move(all));
}

Subgroup trivial_subgroup(GroupPtr g) { return subgroup_unchecked(std::move(g), {0}); }

bool is_homomorphism(const GroupHom& f) {
  const FiniteGroup& d = *f.domain;
  const FiniteGroup& c = *f.codomain;
  if (f.images.size() != d.order() || f.images[0] != 0) return false;
  for (Element a = 0; a < d.order(); ++a)
    for (Element b = 0; b < d.order(); ++b)
      if (f.images[d.mul(a, b)] != c.mul(f.images[a], f.images[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Standard groups

GroupPtr permutation_group(std::string name, std::size_t degree,
                           const std::vector<std::vector<std::uint32_t>>& generators) {
  using Perm = std::vector<std::uint32_t>;
  for (const Perm& p : generators) {
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == degree;
    for (std::size_t i = 0; ok && i < degree; ++i) ok = sorted[i] == i;
    if (!ok) throw Error(ErrorKind::MalformedSpec, "generator is not a permutation of the points");
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Perm, Element> index{{id, 0}};
  std::vector<Perm> elems{id};
  auto compose = [&](const Perm& g, const Perm& h) {  // apply g, then h
    Perm out(degree);
    for (std::size_t x = 0; x < degree; ++x) out[x] = h[g[x]];
    return out;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& s : generators) {
      Perm p = compose(elems[i], s);
      if (index.find(p) == index.end()) {
        if (elems.size() >= FiniteGroup::kMaxOrder) throw Error(ErrorKind::TooLarge, "permutation group exceeds 2^16 elements");
        index.emplace(p, static_cast<Element>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }
  std::vector<std::vector<Element>> table(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  return make_group(std::move(name), std::move(table));
}

GroupPtr cyclic_group(std::size_t n) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return make_group("Z" + std::to_string(n), std::move(t));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order();
  std::vector<std::vector<Element>> t(na * nb, std::vector<Element>(na * nb));
  // element (x, y) has index x * nb + y
  for (std::size_t i = 0; i < na * nb; ++i)
    for (std::size_t j = 0; j < na * nb; ++j) {
      Element x = a->mul(static_cast<Element>(i / nb), static_cast<Element>(j / nb));
      Element y = b->mul(static_cast<Element>(i % nb), static_cast<Element>(j % nb));
      t[i][j] = static_cast<Element>(x * nb + y);
    }
  return make_group(a->name() + "x" + b->name(), std::move(t));
}

GroupPtr dihedral_group(std::size_t n) {
  // r^i s^e has index e * n + i; s r = r^{-1} s
  const std::size_t m = 2 * n;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t i = a % n, e = a / n, j = b % n, f = b / n;
      std::size_t rot = e == 0 ? (i + j) % n : (i + n - j) % n;
      t[a][b] = static_cast<Element>(((e + f) % 2) * n + rot);
    }
  return make_group("D" + std::to_string(m), std::move(t));
}

GroupPtr dicyclic_group(std::size_t n) {
  // a^i x^e, a of order 2n, x^2 = a^n, x a = a^{-1} x; index e * 2n + i
  const std::size_t k = 2 * n, m = 4 * n;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      std::size_t i = p % k, e = p / k, j = q % k, f = q / k;
      std::size_t rot = e == 0 ? (i + j) % k : (i + k - j) % k;
      std::size_t ex = e + f;
      if (ex == 2) {
        rot = (rot + n) % k;
        ex = 0;
      }
      t[p][q] = static_cast<Element>(ex * k + rot);
    }
  return make_group(n == 2 ? "Q8" : "Dic" + std::to_string(n), std::move(t));
}

GroupPtr quaternion_group() { return dicyclic_group(2); }

GroupPtr symmetric_group(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens = {swap, cycle};
  }
  return permutation_group("S" + std::to_string(n), n, gens);
}

GroupPtr alternating_group(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t k = 2; k < n; ++k) {  // 3-cycles (0 1 k)
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return permutation_group("A" + std::to_string(n), n, gens);
}

// ---------------------------------------------------------------------------
// Group files

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_count(const std::string& word, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(word, &used);
    if (used != word.size() || v < 0) throw std::invalid_argument(word);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::MalformedSpec, "expected a non-negative integer, got '" + word + "'", line);
  }
}

}  // namespace

GroupPtr load_group(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.size() < 3) throw Error(ErrorKind::MalformedSpec, "group file is truncated", lines.empty() ? 1 : lines.back().number);
  const Line& head = lines[0];
  if (head.words.size() != 2 || head.words[0] != "group") {
    throw Error(ErrorKind::MalformedSpec, "expected 'group <name>'", head.number);
  }
  const Line& ord = lines[1];
  if (ord.words.size() != 2 || ord.words[0] != "order") {
    throw Error(ErrorKind::MalformedSpec, "expected 'order <n>'", ord.number);
  }
  std::size_t n = parse_count(ord.words[1], ord.number);
  if (n == 0) throw Error(ErrorKind::MalformedSpec, "order must be positive", ord.number);
  if (n > FiniteGroup::kMaxOrder) throw Error(ErrorKind::TooLarge, "group order exceeds 2^16", ord.number);
  const Line& body = lines[2];
  const std::string& name = head.words[1];

  if (body.words.size() == 1 && body.words[0] == "table") {
    if (lines.size() != 3 + n) {
      int at = lines.size() > 3 + n ? lines[3 + n].number : lines.back().number;
      throw Error(ErrorKind::MalformedSpec, "table must have exactly " + std::to_string(n) + " rows", at);
    }
    std::vector<std::vector<Element>> table(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Line& row = lines[3 + r];
      if (row.words.size() != n) {
        throw Error(ErrorKind::MalformedSpec, "row must have " + std::to_string(n) + " entries", row.number);
      }
      for (const std::string& w : row.words) {
        std::size_t v = parse_count(w, row.number);
        if (v >= n) throw Error(ErrorKind::MalformedSpec, "entry " + w + " out of range", row.number);
        table[r].push_back(static_cast<Element>(v));
      }
    }
    return make_group(name, std::move(table));
  }

  if (body.words.size() == 2 && body.words[0] == "perm") {
    std::size_t degree = parse_count(body.words[1], body.number);
    std::vector<std::vector<std::uint32_t>> gens;
    for (std::size_t k = 3; k < lines.size(); ++k) {
      const Line& row = lines[k];
      if (row.words.size() != degree) {
        throw Error(ErrorKind::MalformedSpec, "generator must list " + std::to_string(degree) + " images", row.number);
      }
      std::vector<std::uint32_t> perm;
      for (const std::string& w : row.words) {
        std::size_t v = parse_count(w, row.number);
        if (v < 1 || v > degree) throw Error(ErrorKind::MalformedSpec, "image " + w + " out of range", row.number);
        perm.push_back(static_cast<std::uint32_t>(v - 1));
      }
      std::vector<std::uint32_t> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::MalformedSpec, "generator is not a permutation", row.number);
      }
      gens.push_back(std::move(perm));
    }
    GroupPtr g = permutation_group(name, degree, gens);
    if (g->order() != n) {
      throw Error(ErrorKind::MalformedSpec, "generators produce a group of order " + std::to_string(g->order()) +
                                                ", header says " + std::to_string(n),
                  ord.number);
    }
    return g;
  }
  throw Error(ErrorKind::MalformedSpec, "expected 'table' or 'perm <degree>'", body.number);
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_group(buf.str());
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.name() << "\norder " << g.order() << "\ntable\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Structural queries

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::vector<Element> cls;
    for (Element x = 0; x < g.order(); ++x) {
      Element c = g.conj(x, a);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup centralizer(const GroupPtr& g, Element x) {
  if (x >= g->order()) throw Error(ErrorKind::DimensionMismatch, "element out of range");
  std::vector<Element> elems;
  for (Element y = 0; y < g->order(); ++y)
    if (g->mul(x, y) == g->mul(y, x)) elems.push_back(y);
  return subgroup_unchecked(g, std::move(elems));
}

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  for (Element x : n.elements)
    if (!h.contains(x)) return false;
  for (Element y : h.elements)
    for (Element x : n.elements)
      if (!n.contains(g.conj(y, x))) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, Element x) {
  std::vector<Element> elems;
  elems.reserve(h.order());
  for (Element a : h.elements) elems.push_back(h.parent->conj(x, a));
  std::sort(elems.begin(), elems.end());
  return subgroup_unchecked(h.parent, std::move(elems));
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Element>& gens) {
  return subgroup_unchecked(g, close_under(*g, gens));
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0u);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::size_t span = 1;
  for (Element a : by_order) {
    if (span == g.order()) break;
    if (in[a]) continue;
    gens.push_back(a);
    std::vector<Element> s = close_under(g, gens);
    span = s.size();
    for (Element x : s) in[x] = 1;
  }
  return gens;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > 1024) throw Error(ErrorKind::TooLarge, "subgroup enumeration is limited to order 1024");
  // Cyclic extension: every subgroup is generated by cyclic subgroups, so
  // closing level by level under one more cyclic generator reaches all.
  struct Found {
    std::vector<Element> elements;
    std::vector<Element> gens;
  };
  std::set<std::vector<Element>> seen;
  std::vector<Found> found;
  std::vector<Element> cyclic_gens;
  seen.insert({0});
  found.push_back({{0}, {}});
  for (Element a = 1; a < g->order(); ++a) {
    std::vector<Element> c = close_under(*g, {a});
    if (seen.insert(c).second) {
      found.push_back({c, {a}});
      cyclic_gens.push_back(a);
    }
  }
  std::vector<std::size_t> frontier;
  for (std::size_t i = 1; i < found.size(); ++i) frontier.push_back(i);
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (Element x : cyclic_gens) {
        const Found& s = found[idx];
        if (std::binary_search(s.elements.begin(), s.elements.end(), x)) continue;
        // Lagrange: the extension has order a proper multiple of |S|
        if (s.elements.size() * 2 > g->order()) continue;
        std::vector<Element> gens = s.gens;
        gens.push_back(x);
        std::vector<Element> t = close_under(*g, gens);
        if (seen.insert(t).second) {
          found.push_back({std::move(t), std::move(gens)});
          next.push_back(found.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (Found& f : found) out.push_back(subgroup_unchecked(g, std::move(f.elements)));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroup_conjugacy_reps(const GroupPtr& g) {
  std::vector<Subgroup> all = all_subgroups(g);
  std::set<std::vector<Element>> covered;
  std::vector<Subgroup> reps;
  for (Subgroup& h : all) {
    if (covered.count(h.elements)) continue;
    for (Element x = 0; x < g->order(); ++x) {
      std::vector<Element> c;
      for (Element a : h.elements) c.push_back(g->conj(x, a));
      std::sort(c.begin(), c.end());
      covered.insert(std::move(c));
    }
    reps.push_back(std::move(h));
  }
  return reps;
}

std::vector<Subgroup> normal_subgroups_in(const Subgroup& h) {
  std::vector<Subgroup> out;
  for (const Subgroup& local : all_subgroups(h.as_group)) {
    std::vector<Element> elems;
    for (Element i : local.elements) elems.push_back(h.elements[i]);
    Subgroup n = subgroup_unchecked(h.parent, std::move(elems));
    if (is_normal_in(n, h)) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

QuotientGroup quotient_group(const Subgroup& h, const Subgroup& n) {
  if (!same_group(h.parent, n.parent)) throw Error(ErrorKind::WrongParent, "H and N live in different groups");
  if (!is_normal_in(n, h)) throw Error(ErrorKind::NotNormal, "N is not a normal subgroup of H");
  const FiniteGroup& g = *h.parent;
  std::vector<Element> coset_of(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element a : h.elements) {
    if (coset_of[a] != kUnassigned) continue;
    Element id = static_cast<Element>(reps.size());
    reps.push_back(a);
    for (Element x : n.elements) coset_of[g.mul(a, x)] = id;
  }
  std::vector<std::vector<Element>> table(reps.size(), std::vector<Element>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = coset_of[g.mul(reps[i], reps[j])];
  QuotientGroup q;
  q.source = h;
  q.kernel = n;
  q.as_group = make_group(h.as_group->name() + ".quot" + std::to_string(reps.size()), std::move(table));
  q.project.reserve(h.order());
  for (Element a : h.elements) q.project.push_back(coset_of[a]);
  return q;
}

std::vector<GroupHom> search_homs(const GroupPtr& domain, const GroupPtr& codomain, const PartialHomFilter& accept) {
  const FiniteGroup& d = *domain;
  const FiniteGroup& c = *codomain;
  std::vector<Element> gens = generating_set(d);
  std::vector<GroupHom> out;
  std::size_t budget = 50'000'000;

  // Extend `images` (a hom on <gens[0..k)>) by gens[k] -> y; false on conflict.
  auto extend = [&](std::vector<Element>& images, std::size_t k, Element y) {
    images[gens[k]] = y;
    std::vector<Element> queue;
    for (Element a = 0; a < d.order(); ++a)
      if (images[a] != kUnassigned) queue.push_back(a);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element a = queue[i];
      for (std::size_t j = 0; j <= k; ++j) {
        Element b = d.mul(a, gens[j]);
        Element img = c.mul(images[a], images[gens[j]]);
        if (budget-- == 0) throw Error(ErrorKind::TooLarge, "homomorphism search exceeded its budget");
        if (images[b] == kUnassigned) {
          images[b] = img;
          queue.push_back(b);
        } else if (images[b] != img) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Element> start(d.order(), kUnassigned);
  start[0] = 0;
  if (!accept(start)) return out;
  std::function<void(std::size_t, const std::vector<Element>&)> recurse = [&](std::size_t k,
                                                                               const std::vector<Element>& images) {
    if (k == gens.size()) {
      out.push_back({domain, codomain, images});
      return;
    }
    for (Element y = 0; y < c.order(); ++y) {
      if (d.element_order(gens[k]) % c.element_order(y) != 0) continue;
      std::vector<Element> next = images;
      if (next[gens[k]] != kUnassigned) {
        // gens[k] already lies in the span of earlier generators
        if (next[gens[k]] != y) continue;
      }
      if (!extend(next, k, y)) continue;
      if (!accept(next)) continue;
      recurse(k + 1, next);
    }
  };
  recurse(0, start);
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  return out;
}

std::vector<GroupHom> homs_between(const GroupPtr& domain, const GroupPtr& codomain) {
  return search_homs(domain, codomain, [](const std::vector<Element>&) { return true; });
}

namespace {

std::vector<std::size_t> order_statistics(const FiniteGroup& g) {
  std::vector<std::size_t> orders;
  for (Element a = 0; a < g.order(); ++a) orders.push_back(g.element_order(a));
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool injective_so_far(const std::vector<Element>& images, std::size_t codomain_order) {
  std::vector<char> hit(codomain_order, 0);
  for (Element y : images) {
    if (y == kUnassigned) continue;
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

std::string abelian_label(const FiniteGroup& g) {
  if (g.order() == 1) return "1";
  // number of elements killed by p^k determines the p-primary part
  std::vector<std::size_t> factors;  // invariant factors, built up by prime
  std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> parts;  // per prime: exponents (descending)
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (std::size_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    std::vector<std::size_t> ranks;  // ranks[k] = log_p |{x : x^(p^k) = 1}|
    std::size_t pk = 1;
    for (;;) {
      pk *= p;
      std::size_t count = 0;
      for (Element a = 0; a < g.order(); ++a)
        if (pk % g.element_order(a) == 0) ++count;
      std::size_t r = 0;
      for (std::size_t c = count; c > 1; c /= p) ++r;
      ranks.push_back(r);
      if (ranks.size() >= 2 && ranks[ranks.size() - 1] == ranks[ranks.size() - 2]) break;
      if (ranks.size() == 1 && r == 0) break;
    }
    // cyclic factors of exponent >= k: ranks[k-1] - ranks[k-2]
    std::vector<std::size_t> at_least;
    for (std::size_t k = 0; k < ranks.size(); ++k) at_least.push_back(ranks[k] - (k ? ranks[k - 1] : 0));
    std::vector<std::size_t> exps;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      std::size_t with_exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (std::size_t i = 0; i < with_exactly; ++i) exps.push_back(k + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    primes.push_back(p);
    parts.push_back(exps);
  }
  std::size_t len = 0;
  for (const auto& e : parts) len = std::max(len, e.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t f = 1;
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i < parts[j].size())
        for (std::size_t e = 0; e < parts[j][i]; ++e) f *= primes[j];
    factors.push_back(f);
  }
  std::sort(factors.begin(), factors.end());
  std::string out;
  for (std::size_t f : factors) out += (out.empty() ? "" : " x ") + std::string("Z/") + std::to_string(f);
  return out;
}

std::vector<std::pair<std::string, GroupPtr>> nonabelian_catalogue(std::size_t order) {
  std::vector<std::pair<std::string, GroupPtr>> out;
  if (order % 2 == 0 && order >= 6) out.push_back({"D" + std::to_string(order), dihedral_group(order / 2)});
  if (order == 6) out.front().first = "S3";
  if (order % 4 == 0 && order >= 8) {
    out.push_back({order == 8 ? "Q8" : "Dic" + std::to_string(order / 4), dicyclic_group(order / 4)});
  }
  if (order == 12) out.push_back({"A4", alternating_group(4)});
  if (order == 24) out.push_back({"S4", symmetric_group(4)});
  if (order == 60) out.push_back({"A5", alternating_group(5)});
  if (order == 120) out.push_back({"S5", symmetric_group(5)});
  return out;
}

}  // namespace

bool are_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order() || a->is_abelian() != b->is_abelian()) return false;
  if (order_statistics(*a) != order_statistics(*b)) return false;
  if (a->is_abelian()) return true;  // element orders determine finite abelian groups
  std::size_t target = b->order();
  bool found = false;
  try {
    search_homs(a, b, [&](const std::vector<Element>& images) {
      if (found || !injective_so_far(images, target)) return false;
      if (std::find(images.begin(), images.end(), kUnassigned) == images.end()) found = true;
      return true;
    });
  } catch (const Error&) {
    return false;
  }
  return found;
}

std::string identify_group(const GroupPtr& g) {
  if (g->is_abelian()) return abelian_label(*g);
  if (g->order() <= 128) {
    for (auto& [label, candidate] : nonabelian_catalogue(g->order()))
      if (are_isomorphic(g, candidate)) return label;
  }
  return "order " + std::to_string(g->order());
}

GroupPtr relabel(const GroupPtr& g, const std::vector<Element>& perm) {
  const std::size_t n = g->order();
  if (perm.size() != n || perm[0] != 0) throw Error(ErrorKind::DimensionMismatch, "relabeling must fix the identity");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[perm[a]][perm[b]] = perm[g->mul(a, b)];
  return make_group(g->name() + "'", std::move(table));
}

}  // namespace atlas
