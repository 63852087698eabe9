#pragma once

// Reference computations used only by the tests.  None of them calls the
// SNF engine or the library's coboundary code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "atlas/group.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<Big>>;

// Fraction-free Gaussian elimination.  Returns the rank; `det` receives the
// determinant when the matrix is square.
inline std::size_t bareiss(Dense a, Big* det = nullptr) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Big prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      std::swap(a[p], a[rank]);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  if (det) *det = (rows == cols && rank == rows) ? Big(sign) * prev : Big(0);
  return rank;
}

// Tuples of non-identity elements in lexicographic order.
inline std::vector<std::vector<atlas::Element>> tuples(std::size_t order, std::size_t degree) {
  std::vector<std::vector<atlas::Element>> out;
  if (order < 2 && degree > 0) return out;
  std::vector<atlas::Element> t(degree, 1);
  for (;;) {
    out.push_back(t);
    std::size_t k = degree;
    while (k > 0 && t[k - 1] + 1 == order) t[--k] = 1;
    if (k == 0) break;
    ++t[k - 1];
  }
  return out;
}

// Value of the normalized bar coboundary of f at `args`, evaluated from the
// multiplication table with the unnormalized face formula.  f maps tuples
// to residues mod `modulus` and is zero on tuples containing the identity.
template <class F>
std::int64_t coboundary_at(const atlas::FiniteGroup& g, const std::vector<atlas::Element>& args, F&& f,
                           std::int64_t modulus) {
  const std::size_t n = args.size() - 1;
  auto value = [&](const std::vector<atlas::Element>& t) -> std::int64_t {
    for (atlas::Element x : t)
      if (x == 0) return 0;
    return f(t);
  };
  std::int64_t acc = value(std::vector<atlas::Element>(args.begin() + 1, args.end()));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<atlas::Element> face;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (k == i - 1) {
        face.push_back(g.mul(args[k], args[k + 1]));
        ++k;
      } else {
        face.push_back(args[k]);
      }
    }
    acc += (i % 2 ? -1 : 1) * value(face);
  }
  acc += ((n + 1) % 2 ? -1 : 1) * value(std::vector<atlas::Element>(args.begin(), args.end() - 1));
  return ((acc % modulus) + modulus) % modulus;
}

// Integer matrix of d^n built independently from the table.
inline Dense coboundary_dense(const atlas::FiniteGroup& g, std::size_t n) {
  auto rows = tuples(g.order(), n + 1);
  auto cols = tuples(g.order(), n);
  std::map<std::vector<atlas::Element>, std::size_t> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;
  Dense m(rows.size(), std::vector<Big>(n == 0 ? 0 : cols.size(), 0));
  if (n == 0) return m;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      // coefficient of column c: apply the formula to the indicator of c
      const auto& target = cols[c];
      const std::int64_t big = 1'000'000;
      std::int64_t v = coboundary_at(g, rows[r], [&](const std::vector<atlas::Element>& t) { return t == target ? 1 : 0; }, big);
      if (v > big / 2) v -= big;
      m[r][c] = v;
    }
  }
  return m;
}

// p-adic valuations of the nonzero invariant factors of m, read off a dense
// local elimination over Z/p^e (valuations >= e are reported as e).
inline std::vector<int> local_valuations(const Dense& m, std::int64_t p, int e) {
  std::int64_t mod = 1;
  for (int i = 0; i < e; ++i) mod *= p;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Big v = m[r][c] % mod;
      if (v < 0) v += mod;
      a[r][c] = static_cast<std::int64_t>(v);
    }
  auto val = [&](std::int64_t x) {
    if (x == 0) return e;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto inverse = [&](std::int64_t u) {  // u a unit mod p^e
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < mod; ++k)
      if ((u * k) % mod == 1) return k;
    return x;
  };
  std::vector<int> out;
  std::vector<char> row_used(rows, 0), col_used(cols, 0);
  for (;;) {
    int best = e;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < cols && best > 0; ++c) {
        if (col_used[c] || a[r][c] == 0) continue;
        int v = val(a[r][c]);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
      if (best == 0) break;
    }
    if (best == e) break;
    out.push_back(best);
    row_used[br] = col_used[bc] = 1;
    std::int64_t pv = 1;
    for (int i = 0; i < best; ++i) pv *= p;
    const std::int64_t unit_inv = inverse((a[br][bc] / pv) % mod);
    // clear the pivot column from the other rows
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == br || a[r][bc] == 0) continue;
      const std::int64_t f = (a[r][bc] / pv) % mod * unit_inv % mod;
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = ((a[r][c] - f * a[br][c]) % mod + mod) % mod;
    }
    // the pivot row's other entries are multiples of p^best; column
    // operations clear them without touching the remaining rows
    for (std::size_t c = 0; c < cols; ++c)
      if (c != bc) a[br][c] = 0;
  }
  return out;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Invariant factors (> 1, ascending, divisibility chain) of H^n(G; Q/Z),
// i.e. the torsion of coker d^n, assembled prime by prime from local
// eliminations.
inline std::vector<std::int64_t> cohomology_factors(const atlas::FiniteGroup& g, std::size_t n) {
  const Dense d = coboundary_dense(g, n);
  std::vector<std::vector<std::int64_t>> primary;  // per prime, descending powers
  for (std::int64_t p : prime_factors(static_cast<std::int64_t>(g.order()))) {
    int k = 0;
    for (std::int64_t m = static_cast<std::int64_t>(g.order()); m % p == 0; m /= p) ++k;
    std::vector<std::int64_t> powers;
    for (int v : local_valuations(d, p, k + 1)) {
      if (v == 0) continue;
      std::int64_t q = 1;
      for (int i = 0; i < v; ++i) q *= p;
      powers.push_back(q);
    }
    std::sort(powers.rbegin(), powers.rend());
    primary.push_back(powers);
  }
  std::size_t len = 0;
  for (const auto& v : primary) len = std::max(len, v.size());
  std::vector<std::int64_t> out(len, 1);
  for (const auto& v : primary)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive description of H^n(G; Q/Z) for tiny cases.  Every class has a
// representative with values in (1/N)Z/Z, N = |G|, and such a cocycle is a
// coboundary iff it is d of a cochain with values in (1/N^2)Z/Z.  Returns,
// for each k dividing N, the number of classes killed by k; this determines
// the group.
inline std::map<std::int64_t, std::int64_t> exhaustive_torsion_counts(const atlas::FiniteGroup& g, std::size_t n) {
  const std::int64_t N = static_cast<std::int64_t>(g.order());
  const auto top = tuples(g.order(), n);
  const auto low = tuples(g.order(), n - 1);
  const auto next = tuples(g.order(), n + 1);
  std::map<std::vector<atlas::Element>, std::size_t> top_index, low_index;
  for (std::size_t i = 0; i < top.size(); ++i) top_index[top[i]] = i;
  for (std::size_t i = 0; i < low.size(); ++i) low_index[low[i]] = i;

  auto odometer = [](std::vector<std::int64_t>& v, std::int64_t base) {
    for (std::size_t k = v.size(); k-- > 0;) {
      if (++v[k] < base) return true;
      v[k] = 0;
    }
    return false;
  };

  // coboundaries that land in (1/N)Z/Z, stored as residues mod N
  std::set<std::vector<std::int64_t>> boundaries;
  {
    const std::int64_t M = N * N;
    std::vector<std::int64_t> psi(low.size(), 0);
    do {
      std::vector<std::int64_t> c(top.size());
      bool fits = true;
      for (std::size_t r = 0; r < top.size() && fits; ++r) {
        std::int64_t v = coboundary_at(g, top[r], [&](const std::vector<atlas::Element>& t) { return psi[low_index.at(t)]; }, M);
        if (n == 1) v = 0;  // d^0 vanishes
        fits = v % N == 0;
        c[r] = v / N;
      }
      if (fits) boundaries.insert(c);
    } while (!low.empty() && odometer(psi, M));
  }

  std::vector<std::vector<std::int64_t>> cocycles;
  {
    std::vector<std::int64_t> c(top.size(), 0);
    do {
      bool closed = true;
      for (std::size_t r = 0; r < next.size() && closed; ++r)
        closed = coboundary_at(g, next[r], [&](const std::vector<atlas::Element>& t) { return c[top_index.at(t)]; }, N) == 0;
      if (closed) cocycles.push_back(c);
    } while (!top.empty() && odometer(c, N));
  }

  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t k = 1; k <= N; ++k) {
    if (N % k) continue;
    std::int64_t killed = 0;
    for (const auto& c : cocycles) {
      std::vector<std::int64_t> kc(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) kc[i] = c[i] * k % N;
      if (boundaries.count(kc)) ++killed;
    }
    out[k] = killed / static_cast<std::int64_t>(boundaries.size());
  }
  return out;
}

// Same counts for the abelian group with the given invariant factors.
inline std::map<std::int64_t, std::int64_t> torsion_counts_of(const std::vector<std::int64_t>& factors, std::int64_t N) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t k = 1; k <= N; ++k) {
    if (N % k) continue;
    std::int64_t count = 1;
    for (std::int64_t f : factors) count *= std::gcd(f, k);
    out[k] = count;
  }
  return out;
}

// Closure of a set of elements under multiplication.
inline std::vector<atlas::Element> closure(const atlas::FiniteGroup& g, std::vector<atlas::Element> gens) {
  std::set<atlas::Element> s{0};
  std::vector<atlas::Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (atlas::Element x : gens) {
      atlas::Element y = g.mul(queue[i], x);
      if (s.insert(y).second) queue.push_back(y);
    }
  return {s.begin(), s.end()};
}

// All subgroups: close every pair, then keep adjoining single elements
// until no new subgroup appears.
inline std::set<std::vector<atlas::Element>> subgroups_by_pairs(const atlas::FiniteGroup& g) {
  std::set<std::vector<atlas::Element>> out;
  for (atlas::Element a = 0; a < g.order(); ++a)
    for (atlas::Element b = a; b < g.order(); ++b) out.insert(closure(g, {a, b}));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<atlas::Element>> current(out.begin(), out.end());
    for (const auto& h : current)
      for (atlas::Element x = 0; x < g.order(); ++x) {
        std::vector<atlas::Element> gens = h;
        gens.push_back(x);
        grew |= out.insert(closure(g, gens)).second;
      }
  }
  return out;
}

// One member of each conjugacy class of subgroups, by brute force.
inline std::vector<std::vector<atlas::Element>> subgroup_class_reps(const atlas::FiniteGroup& g) {
  std::set<std::vector<atlas::Element>> seen;
  std::vector<std::vector<atlas::Element>> reps;
  for (const auto& h : subgroups_by_pairs(g)) {
    if (seen.count(h)) continue;
    reps.push_back(h);
    for (atlas::Element x = 0; x < g.order(); ++x) {
      std::vector<atlas::Element> c;
      for (atlas::Element a : h) c.push_back(g.conj(x, a));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return reps;
}

// gcd of all r x r minors, r = rank; s_r divides it.
inline Big determinantal_divisor(const Dense& a) {
  const std::size_t rows = a.size(), cols = a[0].size();
  const std::size_t r = bareiss(a);
  if (r == 0) return 1;
  Big g = 0;
  for (unsigned rs = 0; rs < (1u << rows); ++rs) {
    if (static_cast<std::size_t>(__builtin_popcount(rs)) != r) continue;
    for (unsigned cs = 0; cs < (1u << cols); ++cs) {
      if (static_cast<std::size_t>(__builtin_popcount(cs)) != r) continue;
      Dense minor;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!(rs >> i & 1)) continue;
        minor.emplace_back();
        for (std::size_t j = 0; j < cols; ++j)
          if (cs >> j & 1) minor.back().push_back(a[i][j]);
      }
      Big det;
      bareiss(minor, &det);
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det));
    }
  }
  return g;
}

// Exhaustive search for X in (Z/P)^cols with a X = b (mod P).
inline bool solvable_mod(const std::vector<std::vector<int>>& a, const std::vector<std::int64_t>& b, std::int64_t P) {
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::int64_t> x(cols, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * x[j];
      ok = ((acc - b[i]) % P + P) % P == 0;
    }
    if (ok) return true;
    std::size_t k = cols;
    while (k > 0 && ++x[k - 1] == P) x[--k] = 0;
    if (k == 0) return false;
  }
}

}  // namespace oracle
