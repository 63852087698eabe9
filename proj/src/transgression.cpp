#include "atlas/transgression.hpp"

#include "atlas/error.hpp"

namespace atlas {

Cochain transgression_cochain(const Cochain& c, Element g, const Subgroup& centralizer) {
  if (c.degree == 0) throw Error(ErrorKind::DimensionMismatch, "transgression needs degree >= 1");
  if (!same_group(c.group, centralizer.parent)) throw Error(ErrorKind::WrongParent, "centralizer of another group");
  const std::size_t n = c.degree - 1;
  Cochain out = Cochain::zero(centralizer.as_group, n);
  std::vector<Element> args(c.degree);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    std::vector<Element> local = tuple_at(centralizer.order(), n, i);
    QZ acc;
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < j; ++k) args[w++] = centralizer.elements[local[k]];
      args[w++] = g;
      for (std::size_t k = j; k < n; ++k) args[w++] = centralizer.elements[local[k]];
      if (j % 2) {
        acc -= c.at(args);
      } else {
        acc += c.at(args);
      }
    }
    out.values[i] = acc;
  }
  return out;
}

namespace {

TransgressionResult run(const Cochain& c, Element g, std::size_t degree) {
  if (c.degree != degree) {
    throw Error(ErrorKind::DimensionMismatch, "expected a degree-" + std::to_string(degree) + " cocycle");
  }
  if (g >= c.group->order()) throw Error(ErrorKind::DimensionMismatch, "element out of range");
  if (!is_cocycle(c)) throw Error(ErrorKind::NotACocycle, "transgression input is not a cocycle");
  TransgressionResult r;
  r.element = g;
  r.centralizer = centralizer(c.group, g);
  r.cochain = transgression_cochain(c, g, r.centralizer);
  if (!is_cocycle(r.cochain)) throw Error(ErrorKind::InternalInconsistency, "transgressed cochain is not a cocycle");
  r.cls = class_of(r.cochain, *cohomology_group(r.centralizer.as_group, degree - 1));
  return r;
}

}  // namespace

TransgressionResult transgress(const Cochain& pi, Element g) { return run(pi, g, 4); }

TransgressionResult transgress3(const Cochain& omega, Element g) { return run(omega, g, 3); }

GroupHom conjugation_hom(const Subgroup& from, const Subgroup& to, Element x) {
  const FiniteGroup& G = *from.parent;
  GroupHom f{from.as_group, to.as_group, std::vector<Element>(from.order())};
  for (std::size_t i = 0; i < from.order(); ++i) {
    auto image = to.local_index(G.conj(x, from.elements[i]));
    if (!image) throw Error(ErrorKind::WrongParent, "conjugate does not land in the target subgroup");
    f.images[i] = *image;
  }
  return f;
}

}  // namespace atlas
