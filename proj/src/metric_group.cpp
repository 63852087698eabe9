#include "atlas/metric_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

QZ MetricGroup::b(Element x, Element y) const { return q[group->mul(x, y)] - q[x] - q[y]; }

namespace {

std::string witness(const char* law, std::initializer_list<Element> elems) {
  std::string out = std::string(law) + " fails at (";
  bool first = true;
  for (Element e : elems) {
    out += (first ? "" : ", ") + std::to_string(e);
    first = false;
  }
  return out + ")";
}

}  // namespace

MetricGroup make_metric_group(GroupPtr group, std::vector<QZ> q, std::string name) {
  if (!group->is_abelian()) throw Error(ErrorKind::NotAbelian, "metric group on non-abelian " + group->name());
  if (q.size() != group->order()) throw Error(ErrorKind::DimensionMismatch, "q needs one value per element");
  MetricGroup m{std::move(name), std::move(group), std::move(q)};
  const FiniteGroup& B = *m.group;
  const Element n = static_cast<Element>(B.order());
  for (Element x = 0; x < n; ++x) {
    if (m.q[B.inv(x)] != m.q[x]) throw Error(ErrorKind::NotQuadratic, witness("q(-x) = q(x)", {x}));
    Element multiple = 0;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(B.element_order(x)); ++k) {
      if (m.q[multiple] != m.q[x] * (k * k)) {
        throw Error(ErrorKind::NotQuadratic,
                    witness("q(nx) = n^2 q(x)", {x}) + " with n = " + std::to_string(k));
      }
      multiple = B.mul(multiple, x);
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (m.b(B.mul(x, y), z) != m.b(x, z) + m.b(y, z)) {
          throw Error(ErrorKind::NotQuadratic, witness("b(x + y, z) = b(x, z) + b(y, z)", {x, y, z}));
        }
  return m;
}

MetricGroup trivial_metric_group() { return make_metric_group(cyclic_group(1), {QZ()}, "trivial"); }

bool is_nondegenerate(const MetricGroup& m) {
  const Element n = static_cast<Element>(m.order());
  for (Element x = 1; x < n; ++x) {
    bool radical = true;
    for (Element y = 0; y < n && radical; ++y) radical = m.b(x, y).is_zero();
    if (radical) return false;
  }
  return true;
}

OrthogonalGroup orthogonal_group(const MetricGroup& m) {
  if (m.order() > 64) throw Error(ErrorKind::TooLarge, "orthogonal groups are computed for |B| <= 64");
  auto filter = [&](const std::vector<Element>& images) {
    std::vector<char> seen(m.order(), 0);
    for (std::size_t x = 0; x < images.size(); ++x) {
      if (images[x] == kUnassigned) continue;
      if (seen[images[x]]++ || m.q[images[x]] != m.q[x]) return false;
    }
    return true;
  };
  OrthogonalGroup o;
  o.metric = m;
  for (GroupHom& f : search_homs(m.group, m.group, filter)) o.automorphisms.push_back(std::move(f.images));
  std::sort(o.automorphisms.begin(), o.automorphisms.end());
  // the identity is the lexicographically least bijection fixing 0
  std::map<std::vector<Element>, Element> index;
  for (std::size_t i = 0; i < o.automorphisms.size(); ++i) index[o.automorphisms[i]] = static_cast<Element>(i);
  const std::size_t k = o.automorphisms.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<Element> composite(m.order());
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t x = 0; x < m.order(); ++x) composite[x] = o.automorphisms[s][o.automorphisms[t][x]];
      auto it = index.find(composite);
      if (it == index.end()) throw Error(ErrorKind::InternalInconsistency, "orthogonal group not closed");
      table[s][t] = it->second;
    }
  o.as_group = make_group("O(" + (m.name.empty() ? m.group->name() : m.name) + ")", std::move(table));
  return o;
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient of x^i at index i

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic divisor.
Poly poly_mod(Poly p, const Poly& monic) {
  trim(p);
  const std::size_t dm = monic.size() - 1;
  while (p.size() > dm) {
    const std::int64_t lead = p.back();
    const std::size_t shift = p.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) p[shift + i] -= lead * monic[i];
    trim(p);
  }
  return p;
}

Poly poly_div_exact(Poly p, const Poly& monic) {
  trim(p);
  const std::size_t dm = monic.size() - 1;
  Poly quot(p.size() > dm ? p.size() - dm : 0, 0);
  while (p.size() > dm) {
    const std::int64_t lead = p.back();
    const std::size_t shift = p.size() - 1 - dm;
    quot[shift] = lead;
    for (std::size_t i = 0; i <= dm; ++i) p[shift + i] -= lead * monic[i];
    trim(p);
  }
  if (!p.empty()) throw Error(ErrorKind::InternalInconsistency, "cyclotomic division left a remainder");
  return quot;
}

Poly cyclotomic(std::int64_t n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic(d));
  return p;
}

}  // namespace

bool gauss_sum_check(const MetricGroup& m) {
  std::int64_t D = 1;
  for (const QZ& v : m.q) D = std::lcm(D, v.den());
  Poly pairs(D, 0);
  for (const QZ& x : m.q)
    for (const QZ& y : m.q) {
      QZ diff = y - x;
      pairs[diff.num() * (D / diff.den())] += 1;
    }
  pairs[0] -= static_cast<std::int64_t>(m.order());
  return poly_mod(pairs, cyclotomic(D)).empty();
}

MetricGroup load_metric(std::string_view text, const std::function<GroupPtr(const std::string&)>& resolve) {
  std::istringstream in{std::string(text)};
  std::string raw, name, group_name;
  int number = 0;
  GroupPtr group;
  std::vector<QZ> q;
  std::vector<char> assigned;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ws(raw);
    std::vector<std::string> words;
    for (std::string w; ws >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (name.empty()) {
      if (words.size() != 2 || words[0] != "metric") throw Error(ErrorKind::MalformedSpec, "expected 'metric <name>'", number);
      name = words[1];
      continue;
    }
    if (!group) {
      if (words.size() != 2 || words[0] != "group") throw Error(ErrorKind::MalformedSpec, "expected 'group <groupname>'", number);
      group = resolve(words[1]);
      if (!group) throw Error(ErrorKind::MalformedSpec, "unknown group '" + words[1] + "'", number);
      q.assign(group->order(), QZ());
      assigned.assign(group->order(), 0);
      continue;
    }
    if (words.size() != 2) throw Error(ErrorKind::MalformedSpec, "expected '<element> <num/den>'", number);
    unsigned long x;
    try {
      std::size_t used = 0;
      x = std::stoul(words[0], &used);
      if (used != words[0].size()) throw std::invalid_argument(words[0]);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::MalformedSpec, "bad element index '" + words[0] + "'", number);
    }
    if (x >= group->order()) throw Error(ErrorKind::MalformedSpec, "element index out of range", number);
    if (assigned[x]++) throw Error(ErrorKind::MalformedSpec, "element assigned twice", number);
    try {
      q[x] = QZ::parse(words[1]);
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedSpec, e.detail(), number);
    }
  }
  if (!group) throw Error(ErrorKind::MalformedSpec, "metric file needs 'metric' and 'group' headers", number);
  return make_metric_group(std::move(group), std::move(q), std::move(name));
}

std::string format_metric(const MetricGroup& m) {
  std::ostringstream out;
  out << "metric " << (m.name.empty() ? "unnamed" : m.name) << "\ngroup " << m.group->name() << '\n';
  for (std::size_t x = 0; x < m.q.size(); ++x)
    if (!m.q[x].is_zero()) out << x << ' ' << m.q[x] << '\n';
  return out.str();
}

}  // namespace atlas
