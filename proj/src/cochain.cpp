#include "atlas/cochain.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

std::size_t column_budget() {
  if (const char* env = std::getenv("ETALE_ATLAS_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
  }
  return kDefaultColumnBudget;
}

std::size_t cochain_length(std::size_t order, std::size_t degree) {
  const std::size_t base = order - 1;
  const std::size_t budget = column_budget();
  std::size_t len = 1;
  for (std::size_t k = 0; k < degree; ++k) {
    if (base != 0 && len > budget / base) {
      throw Error(ErrorKind::TooLarge, "(order-1)^" + std::to_string(degree) + " exceeds the column budget of " +
                                           std::to_string(budget));
    }
    len *= base;
  }
  if (len > budget) throw Error(ErrorKind::TooLarge, "cochain space exceeds the column budget");
  return len;
}

std::size_t tuple_index(std::size_t order, const std::vector<Element>& tuple) {
  std::size_t idx = 0;
  for (Element g : tuple) idx = idx * (order - 1) + (g - 1);
  return idx;
}

std::vector<Element> tuple_at(std::size_t order, std::size_t degree, std::size_t index) {
  std::vector<Element> t(degree);
  for (std::size_t k = degree; k-- > 0;) {
    t[k] = static_cast<Element>(index % (order - 1) + 1);
    index /= (order - 1);
  }
  return t;
}

// ---------------------------------------------------------------------------

Cochain Cochain::zero(GroupPtr group, std::size_t degree) {
  std::size_t len = cochain_length(group->order(), degree);
  return Cochain{std::move(group), degree, QZVector(len)};
}

QZ Cochain::at(const std::vector<Element>& tuple) const {
  for (Element g : tuple)
    if (g == 0) return {};
  return values[tuple_index(group->order(), tuple)];
}

void Cochain::set(const std::vector<Element>& tuple, QZ value) {
  if (tuple.size() != degree) throw Error(ErrorKind::DimensionMismatch, "tuple length differs from degree");
  for (Element g : tuple) {
    if (g == 0) throw Error(ErrorKind::DimensionMismatch, "normalized cochains vanish on tuples containing the identity");
    if (g >= group->order()) throw Error(ErrorKind::DimensionMismatch, "tuple entry out of range");
  }
  values[tuple_index(group->order(), tuple)] = value;
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || !same_group(a.group, b.group)) {
    throw Error(ErrorKind::WrongParent, "cochains live on different groups or degrees");
  }
}

}  // namespace

Cochain& Cochain::operator+=(const Cochain& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += rhs.values[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= rhs.values[i];
  return *this;
}

Cochain& Cochain::operator*=(std::int64_t k) {
  for (QZ& v : values) v *= k;
  return *this;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.degree == b.degree && same_group(a.group, b.group) && a.values == b.values;
}

// ---------------------------------------------------------------------------

namespace {

// Calls term(column, sign) for each surviving term of (d f) at `row`.
template <class Fn>
void for_each_face(const FiniteGroup& g, const std::vector<Element>& row, Fn&& term) {
  const std::size_t n = row.size() - 1;  // source degree
  const std::size_t order = g.order();
  std::vector<Element> face(n);
  // f(g_2..g_{n+1})
  for (std::size_t k = 0; k < n; ++k) face[k] = row[k + 1];
  term(tuple_index(order, face), 1);
  // (-1)^i f(.., g_i g_{i+1}, ..)
  for (std::size_t i = 1; i <= n; ++i) {
    Element prod = g.mul(row[i - 1], row[i]);
    if (prod == 0) continue;
    std::size_t w = 0;
    for (std::size_t k = 0; k < n + 1; ++k) {
      if (k == i - 1) {
        face[w++] = prod;
        ++k;
      } else {
        face[w++] = row[k];
      }
    }
    term(tuple_index(order, face), (i % 2) ? -1 : 1);
  }
  // (-1)^{n+1} f(g_1..g_n)
  for (std::size_t k = 0; k < n; ++k) face[k] = row[k];
  term(tuple_index(order, face), ((n + 1) % 2) ? -1 : 1);
}

// Advances a tuple of non-identity elements lexicographically.
bool next_tuple(std::vector<Element>& t, std::size_t order) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (t[k] + 1 < order) {
      ++t[k];
      return true;
    }
    t[k] = 1;
  }
  return false;
}

}  // namespace

IntMatrix coboundary_matrix(const FiniteGroup& g, std::size_t degree) {
  if (degree > kMaxDegree) throw Error(ErrorKind::TooLarge, "degree cap is 5");
  const std::size_t cols = cochain_length(g.order(), degree);
  const std::size_t rows = cochain_length(g.order(), degree + 1);
  if (degree == 0 || rows == 0) return IntMatrix(rows, cols);  // d^0 vanishes on constants
  std::vector<Triplet> entries;
  entries.reserve(rows * (degree + 2));
  std::vector<Element> row(degree + 1, 1);
  std::size_t r = 0;
  do {
    for_each_face(g, row, [&](std::size_t col, int sign) { entries.push_back({r, col, Integer(sign)}); });
    ++r;
  } while (next_tuple(row, g.order()));
  return IntMatrix::from_triplets(rows, cols, std::move(entries));
}

Cochain apply_d(const Cochain& c) {
  if (c.degree > kMaxDegree) throw Error(ErrorKind::TooLarge, "degree cap is 5");
  const FiniteGroup& g = *c.group;
  Cochain out = Cochain::zero(c.group, c.degree + 1);
  if (c.degree == 0 || out.values.empty()) return out;
  std::vector<Element> row(c.degree + 1, 1);
  std::size_t r = 0;
  do {
    QZ acc;
    for_each_face(g, row, [&](std::size_t col, int sign) {
      if (sign > 0) {
        acc += c.values[col];
      } else {
        acc -= c.values[col];
      }
    });
    out.values[r++] = acc;
  } while (next_tuple(row, g.order()));
  return out;
}

bool is_cocycle(const Cochain& c) { return apply_d(c).is_zero(); }

Cochain pullback(const Cochain& c, const GroupHom& f) {
  if (!same_group(c.group, f.codomain)) throw Error(ErrorKind::WrongParent, "cochain does not live on the codomain");
  Cochain out = Cochain::zero(f.domain, c.degree);
  const std::size_t order = f.domain->order();
  if (out.values.empty()) return out;
  std::vector<Element> t(c.degree, 1), image(c.degree);
  std::size_t idx = 0;
  do {
    for (std::size_t k = 0; k < c.degree; ++k) image[k] = f.images[t[k]];
    out.values[idx++] = c.at(image);
  } while (next_tuple(t, order));
  return out;
}

Cochain restrict(const Cochain& c, const Subgroup& h) {
  if (!same_group(c.group, h.parent)) throw Error(ErrorKind::WrongParent, "subgroup of a different group");
  return pullback(c, GroupHom{h.as_group, h.parent, h.elements});
}

Cochain inflate(const Cochain& c, const QuotientGroup& q) {
  if (!same_group(c.group, q.as_group)) throw Error(ErrorKind::WrongParent, "cochain does not live on the quotient");
  return pullback(c, GroupHom{q.source.as_group, q.as_group, q.project});
}

// ---------------------------------------------------------------------------

Cochain load_cochain(std::string_view text, const GroupPtr& group, std::string* name) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  bool have_header = false;
  Cochain c;
  std::vector<char> assigned;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ws(raw);
    std::vector<std::string> words;
    for (std::string w; ws >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!have_header) {
      if (words.size() != 6 || words[0] != "cocycle" || words[2] != "degree" || words[4] != "group") {
        throw Error(ErrorKind::MalformedSpec, "expected 'cocycle <name> degree <n> group <groupname>'", number);
      }
      if (words[5] != group->name()) {
        throw Error(ErrorKind::MalformedSpec, "cocycle is for group '" + words[5] + "', loaded group is '" +
                                                  group->name() + "'",
                    number);
      }
      std::size_t degree;
      try {
        std::size_t used = 0;
        degree = std::stoul(words[3], &used);
        if (used != words[3].size()) throw std::invalid_argument(words[3]);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::MalformedSpec, "bad degree '" + words[3] + "'", number);
      }
      if (degree > kMaxDegree + 1) throw Error(ErrorKind::MalformedSpec, "degree above 6", number);
      if (name) *name = words[1];
      c = Cochain::zero(group, degree);
      assigned.assign(c.values.size(), 0);
      have_header = true;
      continue;
    }
    if (words.size() != c.degree + 1) {
      throw Error(ErrorKind::MalformedSpec, "expected " + std::to_string(c.degree) + " indices and a value", number);
    }
    std::vector<Element> tuple;
    for (std::size_t k = 0; k < c.degree; ++k) {
      unsigned long v;
      try {
        std::size_t used = 0;
        v = std::stoul(words[k], &used);
        if (used != words[k].size()) throw std::invalid_argument(words[k]);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::MalformedSpec, "bad element index '" + words[k] + "'", number);
      }
      if (v == 0) throw Error(ErrorKind::MalformedSpec, "tuples containing the identity are not allowed", number);
      if (v >= group->order()) throw Error(ErrorKind::MalformedSpec, "element index out of range", number);
      tuple.push_back(static_cast<Element>(v));
    }
    QZ value;
    try {
      value = QZ::parse(words.back());
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedSpec, e.detail(), number);
    }
    std::size_t idx = tuple_index(group->order(), tuple);
    if (assigned[idx]) throw Error(ErrorKind::MalformedSpec, "tuple assigned twice", number);
    assigned[idx] = 1;
    c.values[idx] = value;
  }
  if (!have_header) throw Error(ErrorKind::MalformedSpec, "empty cocycle file", number);
  return c;
}

Cochain load_cochain_file(const std::string& path, const GroupPtr& group, std::string* name) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read cocycle file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_cochain(buf.str(), group, name);
}

std::string format_cochain(const Cochain& c, const std::string& name) {
  std::ostringstream out;
  out << "cocycle " << name << " degree " << c.degree << " group " << c.group->name() << '\n';
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i].is_zero()) continue;
    for (Element g : tuple_at(c.group->order(), c.degree, i)) out << g << ' ';
    out << c.values[i] << '\n';
  }
  return out.str();
}

}  // namespace atlas
