#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atlas/cochain.hpp"
#include "atlas/group.hpp"
#include "atlas/snf.hpp"

namespace atlas {

// Coordinates of a cohomology class against a CohomologyGroup basis,
// entry i taken modulo invariant_factors[i].
using Exponents = std::vector<std::int64_t>;

// H^n(G; Q/Z) = ker d^n / im d^{n-1}.
//
// With U d^n V = S, a Q/Z cocycle x has y = V^{-1} x satisfying
// s_k y_k = 0 mod 1 for k < rank; the coordinates past the rank span the
// divisible part of the kernel, which is exactly im d^{n-1} once the free
// rank vanishes.  Hence H^n is the sum of Z/s_k over s_k > 1, generated by
// V e_k / s_k, and the coordinate of [x] along it is s_k y_k.
struct CohomologyGroup {
  GroupPtr group;
  std::size_t degree = 0;
  std::vector<std::int64_t> invariant_factors;
  std::vector<Cochain> generators;
  // diagonal positions of the factors inside the Smith form of d^degree
  std::vector<std::size_t> positions;
  std::shared_ptr<const SnfResult> snf;

  std::int64_t size() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  // "0", "Z/2", "Z/2 x Z/2"
  std::string label() const;
  Cochain representative(const Exponents& e) const;
};

// Smith form of d^degree on G, shared through a process-wide cache.
// Rows are tracked when `need_rows` is set (needed for solving).
std::shared_ptr<const SnfResult> differential_snf(const GroupPtr& g, std::size_t degree, bool need_rows);

// Degrees 1..5.  Throws TooLarge past the column budget and
// InternalInconsistency if a free summand appears.
std::shared_ptr<const CohomologyGroup> cohomology_group(const GroupPtr& g, std::size_t degree);

// phi with d phi = c, or nullopt when [c] != 0.  With the flag set, a
// non-cocycle input raises NotACocycle.
std::optional<Cochain> trivialize(const Cochain& c, bool must_be_cocycle = true);

// Coordinates of [c]; raises NotACocycle.
Exponents class_of(const Cochain& c, const CohomologyGroup& basis);

// All classes on H/N whose inflation to H has coordinates `target`
// (against cohomology_group(H, degree)), sorted.
std::vector<Exponents> inflation_preimage(const Exponents& target, const QuotientGroup& q, std::size_t degree);

bool is_zero_class(const Exponents& e);

void clear_cohomology_cache();

}  // namespace atlas
