#include "atlas/cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "atlas/error.hpp"

namespace atlas {

namespace {

// Row transforms of small differentials are kept eagerly; for large ones
// (d^4 of an order-8 group has 7^5 rows) only on request.
constexpr std::size_t kEagerRowTracking = 4096;

struct SnfEntry {
  GroupPtr group;
  std::shared_ptr<const SnfResult> snf;
  bool rows_tracked = false;
};

struct GroupEntry {
  GroupPtr group;
  std::shared_ptr<const CohomologyGroup> cohomology;
};

std::mutex cache_mutex;
std::map<std::pair<std::uint64_t, std::size_t>, std::vector<SnfEntry>> snf_cache;
std::map<std::pair<std::uint64_t, std::size_t>, std::vector<GroupEntry>> group_cache;

std::int64_t to_small(const Integer& v) {
  auto s = v.to_int64();
  if (!s) throw Error(ErrorKind::InternalInconsistency, "invariant factor does not fit in 64 bits");
  return *s;
}

}  // namespace

std::shared_ptr<const SnfResult> differential_snf(const GroupPtr& g, std::size_t degree, bool need_rows) {
  const auto key = std::make_pair(g->content_hash(), degree);
  {
    std::lock_guard lock(cache_mutex);
    for (const SnfEntry& e : snf_cache[key])
      if (same_group(e.group, g) && (e.rows_tracked || !need_rows)) return e.snf;
  }
  IntMatrix d = coboundary_matrix(*g, degree);
  const bool track_rows = need_rows || d.rows() <= kEagerRowTracking;
  auto snf = std::make_shared<const SnfResult>(smith_normal_form(d, {track_rows, true}));
  std::lock_guard lock(cache_mutex);
  auto& bucket = snf_cache[key];
  bucket.erase(std::remove_if(bucket.begin(), bucket.end(), [&](const SnfEntry& e) { return same_group(e.group, g); }),
               bucket.end());
  bucket.push_back({g, snf, track_rows});
  return snf;
}

void clear_cohomology_cache() {
  std::lock_guard lock(cache_mutex);
  snf_cache.clear();
  group_cache.clear();
}

// ---------------------------------------------------------------------------

std::int64_t CohomologyGroup::size() const {
  std::int64_t n = 1;
  for (std::int64_t f : invariant_factors) n *= f;
  return n;
}

std::string CohomologyGroup::label() const {
  if (invariant_factors.empty()) return "0";
  std::string out;
  for (std::int64_t f : invariant_factors) out += (out.empty() ? "" : " x ") + std::string("Z/") + std::to_string(f);
  return out;
}

Cochain CohomologyGroup::representative(const Exponents& e) const {
  if (e.size() != generators.size()) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
  Cochain c = Cochain::zero(group, degree);
  for (std::size_t i = 0; i < e.size(); ++i) {
    Cochain term = generators[i];
    term *= e[i];
    c += term;
  }
  return c;
}

std::shared_ptr<const CohomologyGroup> cohomology_group(const GroupPtr& g, std::size_t degree) {
  if (degree < 1 || degree > kMaxDegree) throw Error(ErrorKind::DimensionMismatch, "cohomology degree must be 1..5");
  const auto key = std::make_pair(g->content_hash(), degree);
  {
    std::lock_guard lock(cache_mutex);
    for (const GroupEntry& e : group_cache[key])
      if (same_group(e.group, g)) return e.cohomology;
  }
  auto snf = differential_snf(g, degree, false);
  auto previous = differential_snf(g, degree - 1, false);
  const std::size_t cochains = cochain_length(g->order(), degree);
  if (cochains - snf->rank != previous->rank) {
    throw Error(ErrorKind::InternalInconsistency,
                "free rank " + std::to_string(cochains - snf->rank - previous->rank) + " in H^" +
                    std::to_string(degree) + "(" + g->name() + ")");
  }
  auto h = std::make_shared<CohomologyGroup>();
  h->group = g;
  h->degree = degree;
  h->snf = snf;
  for (std::size_t k = 0; k < snf->rank; ++k) {
    const Integer& s = snf->diagonal[k];
    if (s <= Integer(1)) continue;
    std::int64_t factor = to_small(s);
    QZVector y(snf->cols);
    y[k] = QZ(1, factor);
    Cochain gen{g, degree, snf->apply_v(std::move(y))};
    if (!is_cocycle(gen)) throw Error(ErrorKind::InternalInconsistency, "generator is not a cocycle");
    h->invariant_factors.push_back(factor);
    h->generators.push_back(std::move(gen));
    h->positions.push_back(k);
  }
  std::lock_guard lock(cache_mutex);
  group_cache[key].push_back({g, h});
  return h;
}

std::optional<Cochain> trivialize(const Cochain& c, bool must_be_cocycle) {
  if (c.degree == 0) {
    if (c.is_zero()) return std::nullopt;  // nothing maps onto C^0
    return std::nullopt;
  }
  if (must_be_cocycle && !is_cocycle(c)) throw Error(ErrorKind::NotACocycle, "trivialize needs a cocycle");
  auto snf = differential_snf(c.group, c.degree - 1, true);
  auto x = solve_qz(*snf, c.values);
  if (!x) return std::nullopt;
  Cochain phi{c.group, c.degree - 1, std::move(*x)};
  if (apply_d(phi) != c) throw Error(ErrorKind::InternalInconsistency, "trivialization does not reproduce its input");
  return phi;
}

Exponents class_of(const Cochain& c, const CohomologyGroup& basis) {
  if (!same_group(c.group, basis.group) || c.degree != basis.degree) {
    throw Error(ErrorKind::WrongParent, "cocycle and cohomology basis disagree on group or degree");
  }
  if (!is_cocycle(c)) throw Error(ErrorKind::NotACocycle, "class_of needs a cocycle");
  QZVector y = basis.snf->apply_v_inverse(c.values);
  Exponents e;
  for (std::size_t i = 0; i < basis.positions.size(); ++i) {
    const QZ& v = y[basis.positions[i]];
    std::int64_t s = basis.invariant_factors[i];
    if (s % v.den() != 0) throw Error(ErrorKind::InternalInconsistency, "cocycle coordinate outside its torsion");
    e.push_back(v.num() * (s / v.den()) % s);
  }
  return e;
}

bool is_zero_class(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<Exponents> inflation_preimage(const Exponents& target, const QuotientGroup& q, std::size_t degree) {
  auto on_quotient = cohomology_group(q.as_group, degree);
  auto on_source = cohomology_group(q.source.as_group, degree);
  const std::size_t m = on_source->invariant_factors.size();
  const std::size_t k = on_quotient->invariant_factors.size();
  if (target.size() != m) throw Error(ErrorKind::DimensionMismatch, "target class has the wrong length");

  // sum_j e_j img_j = target (mod s), written over Z with slack columns:
  // [img | diag(s)] (e, z) = target
  std::vector<Triplet> entries;
  for (std::size_t j = 0; j < k; ++j) {
    Exponents img = class_of(inflate(on_quotient->generators[j], q), *on_source);
    for (std::size_t i = 0; i < m; ++i)
      if (img[i] != 0) entries.push_back({i, j, Integer(img[i])});
  }
  for (std::size_t i = 0; i < m; ++i) entries.push_back({i, k + i, Integer(on_source->invariant_factors[i])});
  IntMatrix system = IntMatrix::from_triplets(m, k + m, std::move(entries));
  SnfResult snf = smith_normal_form(system);
  std::vector<Integer> rhs;
  for (std::size_t i = 0; i < m; ++i) rhs.push_back(Integer(target[i]));
  auto particular = solve_z(snf, rhs);
  if (!particular) return {};

  const auto& t = on_quotient->invariant_factors;
  auto reduce = [&](const std::vector<Integer>& v) {
    Exponents e(k);
    for (std::size_t j = 0; j < k; ++j) e[j] = mod_small(v[j], t[j]);
    return e;
  };
  // kernel of the class map, closed as a subgroup of sum Z/t_j
  std::vector<Exponents> kernel_gens;
  for (const auto& v : kernel_basis(snf)) kernel_gens.push_back(reduce(v));
  std::set<Exponents> kernel{Exponents(k, 0)};
  std::vector<Exponents> queue{Exponents(k, 0)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Exponents& g : kernel_gens) {
      Exponents s(k);
      for (std::size_t j = 0; j < k; ++j) s[j] = (queue[i][j] + g[j]) % t[j];
      if (kernel.insert(s).second) queue.push_back(std::move(s));
    }
  }
  Exponents base = reduce(*particular);
  std::vector<Exponents> out;
  for (const Exponents& z : kernel) {
    Exponents s(k);
    for (std::size_t j = 0; j < k; ++j) s[j] = (base[j] + z[j]) % t[j];
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace atlas
