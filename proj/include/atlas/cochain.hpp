#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/group.hpp"
#include "atlas/int_matrix.hpp"
#include "atlas/qz.hpp"

namespace atlas {

// Largest cochain-space dimension any operation may allocate.  Read from
// ETALE_ATLAS_BUDGET when set.
std::size_t column_budget();
inline constexpr std::size_t kDefaultColumnBudget = 200000;
inline constexpr std::size_t kMaxDegree = 5;

// (order - 1)^degree, the number of normalized n-tuples.  Throws TooLarge
// past the column budget.
std::size_t cochain_length(std::size_t order, std::size_t degree);

// Tuples are indexed lexicographically over non-identity entries:
// (g_1, ..., g_n) -> sum (g_i - 1) (order - 1)^(n - i).
std::size_t tuple_index(std::size_t order, const std::vector<Element>& tuple);
std::vector<Element> tuple_at(std::size_t order, std::size_t degree, std::size_t index);

// Normalized Q/Z-valued cochain: values at tuples containing the identity
// are implicitly zero and not stored.
struct Cochain {
  GroupPtr group;
  std::size_t degree = 0;
  QZVector values;

  static Cochain zero(GroupPtr group, std::size_t degree);

  QZ at(const std::vector<Element>& tuple) const;
  void set(const std::vector<Element>& tuple, QZ value);
  bool is_zero() const { return atlas::is_zero(values); }

  Cochain& operator+=(const Cochain& rhs);
  Cochain& operator-=(const Cochain& rhs);
  Cochain& operator*=(std::int64_t k);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(std::int64_t k, Cochain a) { return a *= k; }
  friend bool operator==(const Cochain& a, const Cochain& b);
};

// Matrix of d^n : C^n -> C^{n+1} on the normalized bar complex,
//   (d f)(g_1..g_{n+1}) = f(g_2..g_{n+1})
//                         + sum_i (-1)^i f(.., g_i g_{i+1}, ..)
//                         + (-1)^{n+1} f(g_1..g_n),
// with terms whose arguments contain the identity dropped.
IntMatrix coboundary_matrix(const FiniteGroup& g, std::size_t degree);

// Same map evaluated directly on a cochain.
Cochain apply_d(const Cochain& c);
bool is_cocycle(const Cochain& c);

// f^* c: value at (h_1..h_n) is c(f(h_1)..f(h_n)).
Cochain pullback(const Cochain& c, const GroupHom& f);
// Restriction to a subgroup of c's group; throws WrongParent.
Cochain restrict(const Cochain& c, const Subgroup& h);
// Inflation of a cochain on H/N to H; throws WrongParent.
Cochain inflate(const Cochain& c, const QuotientGroup& q);

// Cocycle file: header `cocycle <name> degree <n> group <groupname>`, then
// lines `g1 .. gn num/den`.  The group name must match `group`.
Cochain load_cochain(std::string_view text, const GroupPtr& group, std::string* name = nullptr);
Cochain load_cochain_file(const std::string& path, const GroupPtr& group, std::string* name = nullptr);
std::string format_cochain(const Cochain& c, const std::string& name);

}  // namespace atlas
