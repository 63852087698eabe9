#include "atlas/classifiers.hpp"

#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

namespace {

Cochain resolve_twist(const GroupPtr& g, const Twist& twist, std::size_t degree) {
  if (!twist) return Cochain::zero(g, degree);
  if (twist->degree != degree) {
    throw Error(ErrorKind::DimensionMismatch, "expected a degree-" + std::to_string(degree) + " twist");
  }
  if (!same_group(twist->group, g)) throw Error(ErrorKind::WrongParent, "twist lives on another group");
  if (!is_cocycle(*twist)) throw Error(ErrorKind::NotACocycle, "twist is not a cocycle");
  return *twist;
}

std::int64_t product(const std::vector<std::int64_t>& factors) {
  std::int64_t n = 1;
  for (std::int64_t f : factors) n *= f;
  return n;
}

GroupHom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain) {
  return GroupHom{domain, codomain, std::vector<Element>(domain->order(), 0)};
}

// Degree-`degree` class of c restricted to h, and a trivialization if the
// class vanishes.
std::pair<Exponents, std::optional<Cochain>> restricted_class(const Cochain& c, const Subgroup& h) {
  Cochain r = restrict(c, h);
  Exponents e = class_of(r, *cohomology_group(h.as_group, c.degree));
  std::optional<Cochain> phi;
  if (is_zero_class(e)) {
    phi = trivialize(r, false);
    if (!phi) throw Error(ErrorKind::InternalInconsistency, "zero class without a trivialization");
  }
  return {std::move(e), std::move(phi)};
}

}  // namespace

Classification<LagrangianDatum1> enumerate_lagrangian1(const GroupPtr& g, const Twist& omega) {
  const Cochain w = resolve_twist(g, omega, 3);
  Classification<LagrangianDatum1> out;
  for (Subgroup& h : subgroup_conjugacy_reps(g)) {
    LagrangianDatum1 d;
    std::tie(d.restricted_class, d.psi) = restricted_class(w, h);
    d.admitted = d.psi.has_value();
    d.torsor = cohomology_group(h.as_group, 2)->invariant_factors;
    d.H = std::move(h);
    if (d.admitted) {
      ++out.admitted;
      out.weighted_count += product(d.torsor);
    } else {
      ++out.rejected;
    }
    out.records.push_back(std::move(d));
  }
  return out;
}

Classification<EtaleDatum1> enumerate_etale1(const GroupPtr& g, const Twist& omega) {
  const Cochain w = resolve_twist(g, omega, 3);
  Classification<EtaleDatum1> out;
  for (const Subgroup& h : subgroup_conjugacy_reps(g)) {
    const Cochain on_h = restrict(w, h);
    const Exponents target = class_of(on_h, *cohomology_group(h.as_group, 3));
    for (Subgroup& n : normal_subgroups_in(h)) {
      EtaleDatum1 d;
      d.H = h;
      d.target = target;
      // N as a subgroup of H.as_group, so that restriction goes through H
      std::vector<Element> local;
      for (Element x : n.elements) local.push_back(*h.local_index(x));
      Subgroup n_in_h = make_subgroup(h.as_group, std::move(local));
      auto [cls, phi] = restricted_class(on_h, n_in_h);
      d.phi_exists = phi.has_value();
      d.phi = std::move(phi);
      d.phi_torsor = cohomology_group(n_in_h.as_group, 2)->invariant_factors;
      QuotientGroup q = quotient_group(whole_group(h.as_group), n_in_h);
      d.quotient_factors = cohomology_group(q.as_group, 3)->invariant_factors;
      d.extension_classes = inflation_preimage(target, q, 3);
      d.N = std::move(n);
      if (d.admitted()) {
        ++out.admitted;
        out.weighted_count += product(d.phi_torsor) * static_cast<std::int64_t>(d.extension_classes.size());
      } else {
        ++out.rejected;
      }
      out.records.push_back(std::move(d));
    }
  }
  return out;
}

Classification<LagrangianDatum2Pointed> enumerate_lagrangian2_trivial_pointed(const GroupPtr& g, const Twist& pi) {
  const Cochain p = resolve_twist(g, pi, 4);
  const MetricGroup unit = trivial_metric_group();
  Classification<LagrangianDatum2Pointed> out;
  for (Subgroup& h : subgroup_conjugacy_reps(g)) {
    LagrangianDatum2Pointed d;
    d.A = unit;
    d.gamma = trivial_hom(h.as_group, unit.group);
    std::tie(d.restricted_class, d.trivialization) = restricted_class(p, h);
    d.admitted = d.trivialization.has_value();
    d.torsor = cohomology_group(h.as_group, 3)->invariant_factors;
    d.status = Completeness::Complete;
    d.H = std::move(h);
    if (d.admitted) {
      ++out.admitted;
      out.weighted_count += product(d.torsor);
    } else {
      ++out.rejected;
    }
    out.records.push_back(std::move(d));
  }
  return out;
}

Classification<Etale2RepDatum> enumerate_etale_2rep_pointed(const GroupPtr& g,
                                                             const std::vector<MetricGroup>& candidates) {
  Classification<Etale2RepDatum> out;
  std::vector<OrthogonalGroup> orthogonal;
  for (const MetricGroup& a : candidates) orthogonal.push_back(orthogonal_group(a));
  for (const Subgroup& h : subgroup_conjugacy_reps(g)) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::string a_name = candidates[i].name.empty() ? candidates[i].group->name() : candidates[i].name;
      for (GroupHom& gamma : homs_between(h.as_group, orthogonal[i].as_group)) {
        Etale2RepDatum d{h, i, std::move(gamma),
                         "Fun_" + format_elements(h.elements) + "(" + g->name() + ", " + a_name + ")"};
        out.records.push_back(std::move(d));
        ++out.admitted;
        ++out.weighted_count;
      }
    }
  }
  return out;
}

Classification<Etale2Skeleton> enumerate_etale2_skeleton(const GroupPtr& g, const Twist& pi, const MetricGroup& a) {
  const Cochain p = resolve_twist(g, pi, 4);
  const bool trivial_a = a.order() == 1;
  const OrthogonalGroup o = orthogonal_group(a);
  Classification<Etale2Skeleton> out;
  for (const Subgroup& h : subgroup_conjugacy_reps(g)) {
    const std::vector<GroupHom> gammas = homs_between(h.as_group, o.as_group);
    for (const Subgroup& n : normal_subgroups_in(h)) {
      Exponents cls;
      std::optional<Cochain> theta;
      std::vector<std::int64_t> torsor;
      if (trivial_a) {
        std::tie(cls, theta) = restricted_class(p, n);
        torsor = cohomology_group(n.as_group, 3)->invariant_factors;
      }
      for (const GroupHom& gamma : gammas) {
        Etale2Skeleton d{h, n, gamma, trivial_a, theta.has_value(), theta, torsor};
        if (!trivial_a) {
          ++out.admitted;
          ++out.weighted_count;
        } else if (d.theta_exists) {
          ++out.admitted;
          out.weighted_count += product(torsor);
        } else {
          ++out.rejected;
        }
        out.records.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::vector<CenterSector> center_sectors(const GroupPtr& g, const Twist& twist, std::size_t degree) {
  if (degree != 3 && degree != 4) throw Error(ErrorKind::DimensionMismatch, "center sectors need degree 3 or 4");
  const Cochain c = resolve_twist(g, twist, degree);
  std::vector<CenterSector> out;
  for (const auto& cls : conjugacy_classes(*g)) {
    TransgressionResult t = degree == 4 ? transgress(c, cls.front()) : transgress3(c, cls.front());
    CenterSector s;
    s.rep = cls.front();
    s.class_size = cls.size();
    s.twist_factors = cohomology_group(t.centralizer.as_group, degree - 1)->invariant_factors;
    s.centralizer = std::move(t.centralizer);
    s.twist_trivial = is_zero_class(t.cls);
    s.twist_class = std::move(t.cls);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

void ReportRecord::add_cochain(const std::string& key, const Cochain& c, const std::vector<Element>& embed) {
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i].is_zero()) continue;
    std::string line;
    for (Element x : tuple_at(c.group->order(), c.degree, i)) line += std::to_string(embed[x]) + " ";
    add(key, line + c.values[i].str());
  }
}

std::string format_elements(const std::vector<Element>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) out += (i ? "," : "") + std::to_string(elements[i]);
  return out + "}";
}

std::string format_factors(const std::vector<std::int64_t>& factors) {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + std::to_string(factors[i]);
  return out + "]";
}

std::string format_exponents(const Exponents& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

std::string Report::format() const {
  std::ostringstream out;
  for (const ReportRecord& r : records) {
    out << "RECORD " << r.kind << '\n';
    for (const auto& [k, v] : r.fields) out << k << ": " << v << '\n';
    out << "END\n";
  }
  if (has_summary) {
    out << "SUMMARY records=" << admitted << " weighted_count=" << weighted_count << " rejected=" << rejected << '\n';
  }
  return out.str();
}

namespace {

const char* flag(bool admitted) { return admitted ? "true" : "false"; }

std::string hom_images(const GroupHom& f) { return format_elements(f.images); }

template <class T>
Report skeleton(const Classification<T>& c) {
  Report r;
  r.admitted = c.admitted;
  r.rejected = c.rejected;
  r.weighted_count = c.weighted_count;
  return r;
}

}  // namespace

Report to_report(const Classification<LagrangianDatum1>& c) {
  Report r = skeleton(c);
  for (const LagrangianDatum1& d : c.records) {
    ReportRecord rec{"lagrangian1", {}};
    rec.add("H", format_elements(d.H.elements));
    rec.add("H_label", identify_group(d.H.as_group));
    rec.add("admitted", flag(d.admitted));
    rec.add("restricted_class", format_exponents(d.restricted_class));
    rec.add("torsor", format_factors(d.torsor));
    rec.add("choices_up_to_coboundary", std::to_string(d.admitted ? product(d.torsor) : 0));
    if (d.psi) rec.add_cochain("psi_entry", *d.psi, d.H.elements);
    r.records.push_back(std::move(rec));
  }
  return r;
}

Report to_report(const Classification<EtaleDatum1>& c) {
  Report r = skeleton(c);
  for (const EtaleDatum1& d : c.records) {
    ReportRecord rec{"etale1", {}};
    rec.add("H", format_elements(d.H.elements));
    rec.add("N", format_elements(d.N.elements));
    rec.add("quotient_label", identify_group(quotient_group(d.H, d.N).as_group));
    rec.add("admitted", flag(d.admitted()));
    rec.add("phi_exists", flag(d.phi_exists));
    rec.add("phi_torsor", format_factors(d.phi_torsor));
    rec.add("omega_H_class", format_exponents(d.target));
    rec.add("quotient_H3", format_factors(d.quotient_factors));
    rec.add("extension_count", std::to_string(d.extension_classes.size()));
    for (const Exponents& e : d.extension_classes) rec.add("extension_class", format_exponents(e));
    if (d.phi) {
      // phi lives on N inside H.as_group; map back to G indices
      std::vector<Element> embed;
      for (Element x : d.N.elements) embed.push_back(x);
      rec.add_cochain("phi_entry", *d.phi, embed);
    }
    r.records.push_back(std::move(rec));
  }
  return r;
}

Report to_report(const Classification<LagrangianDatum2Pointed>& c) {
  Report r = skeleton(c);
  for (const LagrangianDatum2Pointed& d : c.records) {
    ReportRecord rec{"lagrangian2", {}};
    rec.add("H", format_elements(d.H.elements));
    rec.add("H_label", identify_group(d.H.as_group));
    rec.add("A", d.A.name);
    rec.add("gamma", hom_images(d.gamma));
    rec.add("status", d.status == Completeness::Complete ? "COMPLETE" : "SKELETON");
    rec.add("admitted", flag(d.admitted));
    rec.add("restricted_class", format_exponents(d.restricted_class));
    rec.add("torsor", format_factors(d.torsor));
    rec.add("choices_up_to_coboundary", std::to_string(d.admitted ? product(d.torsor) : 0));
    if (d.admitted) rec.add("fusion_2category", "bosonic, pointed sector, center Z1(2Vect^pi_G)");
    if (d.trivialization) rec.add_cochain("trivialization_entry", *d.trivialization, d.H.elements);
    r.records.push_back(std::move(rec));
  }
  return r;
}

Report to_report(const Classification<Etale2RepDatum>& c, const std::vector<MetricGroup>& candidates) {
  Report r = skeleton(c);
  for (const Etale2RepDatum& d : c.records) {
    ReportRecord rec{"etale2rep", {}};
    rec.add("H", format_elements(d.H.elements));
    rec.add("H_label", identify_group(d.H.as_group));
    const MetricGroup& a = candidates[d.candidate];
    rec.add("A", a.name.empty() ? a.group->name() : a.name);
    rec.add("gamma", hom_images(d.gamma));
    rec.add("category", d.category);
    rec.add("admitted", "true");
    r.records.push_back(std::move(rec));
  }
  return r;
}

Report to_report(const Classification<Etale2Skeleton>& c, const MetricGroup& a) {
  Report r = skeleton(c);
  for (const Etale2Skeleton& d : c.records) {
    ReportRecord rec{"etale2", {}};
    rec.add("H", format_elements(d.H.elements));
    rec.add("N", format_elements(d.N.elements));
    rec.add("A", a.name.empty() ? a.group->name() : a.name);
    rec.add("gamma", hom_images(d.gamma));
    if (d.higher_data_verified) {
      rec.add("admitted", flag(d.theta_exists));
      rec.add("theta_exists", flag(d.theta_exists));
      rec.add("theta_torsor", format_factors(d.theta_torsor));
      if (d.theta) rec.add_cochain("theta_entry", *d.theta, d.N.elements);
    } else {
      rec.add("admitted", "true");
      rec.add("status", "UNVERIFIED_HIGHER_DATA");
    }
    r.records.push_back(std::move(rec));
  }
  return r;
}

Report to_report(const std::vector<CenterSector>& sectors, std::size_t degree) {
  Report r;
  for (const CenterSector& s : sectors) {
    ReportRecord rec{"center", {}};
    rec.add("rep", std::to_string(s.rep));
    rec.add("class_size", std::to_string(s.class_size));
    rec.add("centralizer", format_elements(s.centralizer.elements));
    rec.add("centralizer_label", identify_group(s.centralizer.as_group));
    rec.add("twist_degree", std::to_string(degree - 1));
    rec.add("twist_group", format_factors(s.twist_factors));
    rec.add("twist_class", format_exponents(s.twist_class));
    rec.add("twist_trivial", flag(s.twist_trivial));
    r.records.push_back(std::move(rec));
    ++r.admitted;
    r.weighted_count += static_cast<std::int64_t>(s.class_size);
  }
  return r;
}

}  // namespace atlas
