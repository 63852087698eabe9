#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/group.hpp"
#include "atlas/qz.hpp"

namespace atlas {

// Finite abelian group with a quadratic form q : B -> Q/Z.
struct MetricGroup {
  std::string name;
  GroupPtr group;
  std::vector<QZ> q;

  std::size_t order() const { return group->order(); }
  // b(x, y) = q(x + y) - q(x) - q(y)
  QZ b(Element x, Element y) const;
};

// Checks abelianness (NotAbelian) and the quadratic law: q(-x) = q(x),
// q(nx) = n^2 q(x), b bi-additive (NotQuadratic, naming a witness).
MetricGroup make_metric_group(GroupPtr group, std::vector<QZ> q, std::string name = "");
// The unit metric group on the trivial group.
MetricGroup trivial_metric_group();

bool is_nondegenerate(const MetricGroup& m);

// Automorphisms of B preserving q.  Member 0 is the identity; the group
// law on as_group is composition, (s * t)(x) = s(t(x)).
struct OrthogonalGroup {
  MetricGroup metric;
  std::vector<std::vector<Element>> automorphisms;
  GroupPtr as_group;

  Element act(Element sigma, Element x) const { return automorphisms[sigma][x]; }
};

// TooLarge above order 64.
OrthogonalGroup orthogonal_group(const MetricGroup& m);

// |sum_x exp(2 pi i q(x))|^2 == |B|, decided exactly: the pair sum
// sum_{x,y} z^{D(q(y) - q(x))} - |B| must vanish at a primitive D-th root
// of unity z, i.e. be divisible by the cyclotomic polynomial Phi_D.
bool gauss_sum_check(const MetricGroup& m);

// Metric file: `metric <name>`, `group <groupname>`, then `x num/den`
// lines.  `resolve` maps the group name to a group.
MetricGroup load_metric(std::string_view text, const std::function<GroupPtr(const std::string&)>& resolve);
std::string format_metric(const MetricGroup& m);

}  // namespace atlas
