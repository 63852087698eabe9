#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

using Element = std::uint32_t;

// A finite group given by its full Cayley table.  Element 0 is the
// identity; row g, column h holds g*h.  Construction validates the group
// axioms, so every FiniteGroup in circulation is a group.
class FiniteGroup {
public:
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

  // Throws NotAGroup or TooLarge.
  FiniteGroup(std::string name, std::vector<std::vector<Element>> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  // x g x^{-1}
  Element conj(Element x, Element g) const noexcept { return mul(mul(x, g), inv(x)); }
  Element pow(Element a, std::int64_t k) const;
  std::size_t element_order(Element a) const noexcept { return element_order_[a]; }
  bool is_abelian() const noexcept { return abelian_; }

  std::vector<std::vector<Element>> table() const;
  std::uint64_t content_hash() const noexcept { return hash_; }
  bool same_table(const FiniteGroup& other) const noexcept { return table_ == other.table_; }

private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  bool abelian_ = true;
  std::uint64_t hash_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::string name, std::vector<std::vector<Element>> table);

// True when both pointers denote the same group (same object or same table).
bool same_group(const GroupPtr& a, const GroupPtr& b);

// A subgroup together with its re-indexed copy: local index i of as_group
// corresponds to parent element elements[i].  elements is sorted, so
// local 0 is the identity.
struct Subgroup {
  GroupPtr parent;
  std::vector<Element> elements;
  GroupPtr as_group;

  std::size_t order() const noexcept { return elements.size(); }
  const std::vector<Element>& embed() const noexcept { return elements; }
  bool contains(Element g) const;
  std::optional<Element> local_index(Element g) const;
  bool is_trivial() const noexcept { return elements.size() == 1; }
};

// Validates closure; elements may be given in any order.
Subgroup make_subgroup(GroupPtr parent, std::vector<Element> elements);
Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);

// Coset group H/N.  project maps local indices of H to coset indices;
// cosets are numbered by their least element, so N itself is coset 0.
struct QuotientGroup {
  Subgroup source;
  Subgroup kernel;
  GroupPtr as_group;
  std::vector<Element> project;
};

struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Element> images;

  Element operator()(Element g) const { return images[g]; }
};

bool is_homomorphism(const GroupHom& f);

// ---------------------------------------------------------------------------
// Group files

// Parses the text group format (`table` or `perm` body).  Throws
// MalformedSpec with a line number, NotAGroup, or TooLarge.
GroupPtr load_group(std::string_view text);
GroupPtr load_group_file(const std::string& path);
// Writes the `table` form, which load_group reads back.
std::string format_group(const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Structural queries

// Classes ordered by representative; each class sorted, so the
// representative (least index) is its first element.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(const GroupPtr& g, Element x);
bool is_normal_in(const Subgroup& n, const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, Element x);  // x H x^{-1}

// Subgroup generated by the given elements.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Element>& gens);

// A small generating set, found greedily from elements of large order.
std::vector<Element> generating_set(const FiniteGroup& g);

// All subgroups, ordered by (order, element set).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
// Lexicographically least member of each conjugacy orbit, same ordering.
std::vector<Subgroup> subgroup_conjugacy_reps(const GroupPtr& g);
// Subgroups N <= H normal in H, as subgroups of H's parent.
std::vector<Subgroup> normal_subgroups_in(const Subgroup& h);

QuotientGroup quotient_group(const Subgroup& h, const Subgroup& n);

std::vector<GroupHom> homs_between(const GroupPtr& domain, const GroupPtr& codomain);

// Backtracking search over homomorphisms.  `accept` sees each partial map
// (images[d] == kUnassigned off the subgroup built so far) and prunes.
inline constexpr Element kUnassigned = static_cast<Element>(-1);
using PartialHomFilter = std::function<bool(const std::vector<Element>& images)>;
std::vector<GroupHom> search_homs(const GroupPtr& domain, const GroupPtr& codomain,
                                  const PartialHomFilter& accept);

// Isomorphism by fingerprint (order, element-order multiset, abelianness)
// followed by exhaustive search for a bijective homomorphism.
bool are_isomorphic(const GroupPtr& a, const GroupPtr& b);
// Human label such as "1", "Z/2", "Z/2 x Z/4", "S3", "Q8"; falls back to
// "order n" for groups outside the small catalogue.
std::string identify_group(const GroupPtr& g);

// Copy of g with elements renamed by a permutation fixing 0:
// new index perm[i] is old element i.
GroupPtr relabel(const GroupPtr& g, const std::vector<Element>& perm);

// ---------------------------------------------------------------------------
// Standard groups

GroupPtr cyclic_group(std::size_t n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr dihedral_group(std::size_t n);  // order 2n
GroupPtr quaternion_group();             // Q8
GroupPtr dicyclic_group(std::size_t n);  // order 4n
GroupPtr symmetric_group(std::size_t n);
GroupPtr alternating_group(std::size_t n);
// Group generated by permutations in one-line notation on 0..degree-1;
// products compose left to right ((g*h)(x) = h(g(x))).
GroupPtr permutation_group(std::string name, std::size_t degree,
                           const std::vector<std::vector<std::uint32_t>>& generators);

}  // namespace atlas
