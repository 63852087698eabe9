#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atlas/cohomology.hpp"
#include "atlas/metric_group.hpp"
#include "atlas/transgression.hpp"

namespace atlas {

// Classifier inputs take an optional twist; nullopt means the zero cocycle.
using Twist = std::optional<Cochain>;

struct LagrangianDatum1 {
  Subgroup H;
  Exponents restricted_class;  // [omega|_H] in H^3(H)
  bool admitted = false;
  std::optional<Cochain> psi;  // d psi = omega|_H
  std::vector<std::int64_t> torsor;  // invariant factors of H^2(H)
};

struct EtaleDatum1 {
  Subgroup H;
  Subgroup N;
  bool phi_exists = false;
  std::optional<Cochain> phi;  // d phi = omega|_N
  std::vector<std::int64_t> phi_torsor;  // H^2(N)
  Exponents target;  // [omega|_H]
  std::vector<Exponents> extension_classes;  // on H/N, inflating to target
  std::vector<std::int64_t> quotient_factors;  // H^3(H/N)
  bool admitted() const { return phi_exists && !extension_classes.empty(); }
};

enum class Completeness { Complete, Skeleton };

struct LagrangianDatum2Pointed {
  Subgroup H;
  MetricGroup A;
  GroupHom gamma;
  Exponents restricted_class;  // [pi|_H] in H^4(H)
  bool admitted = false;
  std::optional<Cochain> trivialization;  // d phi = pi|_H
  std::vector<std::int64_t> torsor;  // H^3(H)
  Completeness status = Completeness::Complete;
};

struct Etale2RepDatum {
  Subgroup H;
  std::size_t candidate = 0;  // index into the candidate list
  GroupHom gamma;  // H -> O(A)
  std::string category;  // Fun_H(G, A)
};

struct Etale2Skeleton {
  Subgroup H;
  Subgroup N;
  GroupHom gamma;
  bool higher_data_verified = false;  // false: UNVERIFIED_HIGHER_DATA
  bool theta_exists = false;  // trivial A only: [pi|_N] = 0
  std::optional<Cochain> theta;
  std::vector<std::int64_t> theta_torsor;  // H^3(N), trivial A only
};

struct CenterSector {
  Element rep = 0;
  std::size_t class_size = 0;
  Subgroup centralizer;
  Exponents twist_class;
  std::vector<std::int64_t> twist_factors;
  bool twist_trivial = true;
};

template <class T>
struct Classification {
  std::vector<T> records;
  std::size_t admitted = 0;
  std::size_t rejected = 0;
  std::int64_t weighted_count = 0;
};

// Weighted count: sum of |H^2(H)| over admitted H.
Classification<LagrangianDatum1> enumerate_lagrangian1(const GroupPtr& g, const Twist& omega);
// Weighted count: sum over admitted (H, N) of |H^2(N)| times the number of
// extension classes.
Classification<EtaleDatum1> enumerate_etale1(const GroupPtr& g, const Twist& omega);
// Weighted count: sum of |H^3(H)| over admitted H.
Classification<LagrangianDatum2Pointed> enumerate_lagrangian2_trivial_pointed(const GroupPtr& g, const Twist& pi);
// Every triple is admitted; weighted count equals the record count.
Classification<Etale2RepDatum> enumerate_etale_2rep_pointed(const GroupPtr& g,
                                                             const std::vector<MetricGroup>& candidates);
// Trivial A: admitted iff [pi|_N] = 0, weighted by |H^3(N)|.  Nontrivial A:
// every triple is admitted with unverified higher data, weight 1.
Classification<Etale2Skeleton> enumerate_etale2_skeleton(const GroupPtr& g, const Twist& pi, const MetricGroup& a);
// degree 3 or 4; one sector per conjugacy class.
std::vector<CenterSector> center_sectors(const GroupPtr& g, const Twist& twist, std::size_t degree);

// ---------------------------------------------------------------------------
// Text reports: RECORD <kind> blocks of `key: value` lines closed by END,
// then `SUMMARY records=<admitted> weighted_count=<w> rejected=<r>`.

struct ReportRecord {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  // one `<key>: g1 .. gn num/den` line per nonzero value, indices in `embed`
  void add_cochain(const std::string& key, const Cochain& c, const std::vector<Element>& embed);
};

struct Report {
  std::vector<ReportRecord> records;
  std::size_t admitted = 0;
  std::size_t rejected = 0;
  std::int64_t weighted_count = 0;
  bool has_summary = true;

  std::string format() const;
};

std::string format_elements(const std::vector<Element>& elements);  // {0,1,3}
std::string format_factors(const std::vector<std::int64_t>& factors);  // [2,2] or []
std::string format_exponents(const Exponents& e);  // (1,0)

Report to_report(const Classification<LagrangianDatum1>& c);
Report to_report(const Classification<EtaleDatum1>& c);
Report to_report(const Classification<LagrangianDatum2Pointed>& c);
Report to_report(const Classification<Etale2RepDatum>& c, const std::vector<MetricGroup>& candidates);
Report to_report(const Classification<Etale2Skeleton>& c, const MetricGroup& a);
Report to_report(const std::vector<CenterSector>& sectors, std::size_t degree);

}  // namespace atlas
