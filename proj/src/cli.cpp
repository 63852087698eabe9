#include "atlas/cli.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "atlas/classifiers.hpp"
#include "atlas/error.hpp"

namespace atlas {

namespace {

// Error raised while reading a particular file; keeps the path for messages.
struct FileError {
  std::string path;
  Error error;
};

template <class Fn>
auto with_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedSpec || e.kind() == ErrorKind::NotAGroup || e.kind() == ErrorKind::NotAbelian ||
        e.kind() == ErrorKind::NotQuadratic) {
      throw FileError{path, e};
    }
    throw;
  }
}

// <name>.grp, or its lower-case spelling, in the first directory holding one.
std::string sibling_group_file(const std::string& name, const std::vector<std::filesystem::path>& dirs) {
  std::string lower = name;
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (const auto& dir : dirs)
    for (const std::string& stem : {name, lower})
      if (std::filesystem::exists(dir / (stem + ".grp"))) return (dir / (stem + ".grp")).string();
  return {};
}

Error usage(const std::string& what) { return Error(ErrorKind::MalformedSpec, what); }

struct Inputs {
  GroupPtr group;
  Twist twist;
  std::vector<MetricGroup> metrics;
};

Inputs load_inputs(const RunConfig& cfg, bool want_cocycle, bool want_metrics) {
  Inputs in;
  in.group = with_path(cfg.group_path, [&] { return load_group_file(cfg.group_path); });
  if (cfg.cocycle_path) {
    if (!want_cocycle) throw usage("--cocycle is not used by '" + cfg.command + "'");
    in.twist = with_path(*cfg.cocycle_path, [&] { return load_cochain_file(*cfg.cocycle_path, in.group); });
  }
  if (!cfg.metric_paths.empty() && !want_metrics) throw usage("--metric is not used by '" + cfg.command + "'");
  for (const std::string& path : cfg.metric_paths) {
    auto resolve = [&](const std::string& name) -> GroupPtr {
      if (name == in.group->name()) return in.group;
      const std::string file = sibling_group_file(name, {std::filesystem::path(path).parent_path(),
                                                         std::filesystem::path(cfg.group_path).parent_path()});
      if (file.empty()) throw Error(ErrorKind::MalformedSpec, "no group file found for '" + name + "'");
      return with_path(file, [&] { return load_group_file(file); });
    };
    in.metrics.push_back(with_path(path, [&] {
      std::ifstream f(path);
      if (!f) throw Error(ErrorKind::MalformedSpec, "cannot read metric file '" + path + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      return load_metric(buf.str(), resolve);
    }));
  }
  return in;
}

std::size_t need_degree(const RunConfig& cfg, std::size_t lo, std::size_t hi) {
  if (!cfg.degree) throw usage("'" + cfg.command + "' needs --degree");
  if (*cfg.degree < lo || *cfg.degree > hi) {
    throw usage("--degree must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return *cfg.degree;
}

// Random cochain with denominators dividing |G|.
Cochain random_cochain(const GroupPtr& g, std::size_t degree, std::mt19937_64& rng) {
  Cochain c = Cochain::zero(g, degree);
  const std::int64_t den = static_cast<std::int64_t>(g->order());
  std::uniform_int_distribution<std::int64_t> pick(0, den - 1);
  for (QZ& v : c.values) v = QZ(pick(rng), den);
  return c;
}

std::string cohomology_report(const GroupPtr& g, std::size_t degree, const std::optional<std::uint64_t>& seed) {
  auto h = cohomology_group(g, degree);
  std::ostringstream out;
  out << "H^" << degree << " = " << h->label() << '\n';
  out << "invariant_factors: " << format_factors(h->invariant_factors) << '\n';
  for (std::size_t i = 0; i < h->generators.size(); ++i) {
    out << "GENERATOR " << i << " order " << h->invariant_factors[i] << '\n';
    out << format_cochain(h->generators[i], "gen" + std::to_string(i));
    out << "END\n";
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::size_t checks = 0;
    for (int trial = 0; trial < 5; ++trial) {
      Cochain eta = random_cochain(g, degree - 1, rng);
      Cochain boundary = apply_d(eta);
      if (!trivialize(boundary)) throw Error(ErrorKind::InternalInconsistency, "coboundary failed to trivialize");
      for (std::size_t i = 0; i < h->generators.size(); ++i) {
        Exponents e = class_of(h->generators[i] + boundary, *h);
        for (std::size_t j = 0; j < e.size(); ++j)
          if (e[j] != (i == j ? 1 : 0)) throw Error(ErrorKind::InternalInconsistency, "class_of moved under a coboundary");
      }
      ++checks;
    }
    out << "CHECK seed=" << *seed << " random_coboundaries=" << checks << " passed\n";
  }
  return out.str();
}

std::string transgress_report(const GroupPtr& g, const Cochain& c, const RunConfig& cfg) {
  if (!cfg.element) throw usage("'transgress' needs --element");
  if (*cfg.element >= g->order()) throw usage("--element out of range");
  if (cfg.degree && *cfg.degree != c.degree) throw usage("--degree disagrees with the cocycle file");
  if (c.degree != 3 && c.degree != 4) throw usage("'transgress' takes a degree-3 or degree-4 cocycle");
  TransgressionResult t = c.degree == 4 ? transgress(c, *cfg.element) : transgress3(c, *cfg.element);
  const std::string zname = g->name() + "_Z" + std::to_string(*cfg.element);
  GroupPtr z = make_group(zname, t.centralizer.as_group->table());
  Cochain renamed{z, t.cochain.degree, t.cochain.values};
  auto h = cohomology_group(z, c.degree - 1);
  std::ostringstream out;
  out << "element: " << *cfg.element << '\n';
  out << "centralizer: " << format_elements(t.centralizer.elements) << '\n';
  out << "centralizer_label: " << identify_group(z) << '\n';
  out << "target: H^" << c.degree - 1 << " = " << h->label() << '\n';
  out << "class: " << format_exponents(t.cls) << '\n';
  out << "class_trivial: " << (is_zero_class(t.cls) ? "true" : "false") << '\n';
  out << "GROUP\n" << format_group(*z) << "END\n";
  out << "COCYCLE\n" << format_cochain(renamed, "tau" + std::to_string(*cfg.element)) << "END\n";
  return out.str();
}

std::string dispatch(const RunConfig& cfg) {
  const std::string& cmd = cfg.command;
  if (cmd == "cohomology") {
    Inputs in = load_inputs(cfg, false, false);
    return cohomology_report(in.group, need_degree(cfg, 1, kMaxDegree), cfg.seed);
  }
  if (cfg.seed) throw usage("--seed is only used by 'cohomology'");
  if (cmd == "lagrangian1") {
    Inputs in = load_inputs(cfg, true, false);
    return to_report(enumerate_lagrangian1(in.group, in.twist)).format();
  }
  if (cmd == "etale1") {
    Inputs in = load_inputs(cfg, true, false);
    return to_report(enumerate_etale1(in.group, in.twist)).format();
  }
  if (cmd == "lagrangian2") {
    Inputs in = load_inputs(cfg, true, false);
    return to_report(enumerate_lagrangian2_trivial_pointed(in.group, in.twist)).format();
  }
  if (cmd == "etale2rep") {
    Inputs in = load_inputs(cfg, false, true);
    if (in.metrics.empty()) in.metrics.push_back(trivial_metric_group());
    return to_report(enumerate_etale_2rep_pointed(in.group, in.metrics), in.metrics).format();
  }
  if (cmd == "etale2") {
    Inputs in = load_inputs(cfg, true, true);
    if (in.metrics.size() > 1) throw usage("'etale2' takes at most one --metric");
    MetricGroup a = in.metrics.empty() ? trivial_metric_group() : in.metrics.front();
    return to_report(enumerate_etale2_skeleton(in.group, in.twist, a), a).format();
  }
  if (cmd == "center") {
    Inputs in = load_inputs(cfg, true, false);
    std::size_t degree = cfg.degree ? need_degree(cfg, 3, 4) : (in.twist ? in.twist->degree : 0);
    if (degree != 3 && degree != 4) throw usage("'center' needs --degree 3 or 4");
    return to_report(center_sectors(in.group, in.twist, degree), degree).format();
  }
  if (cmd == "transgress") {
    Inputs in = load_inputs(cfg, true, false);
    if (!in.twist) throw usage("'transgress' needs --cocycle");
    return transgress_report(in.group, *in.twist, cfg);
  }
  throw usage("unknown command '" + cmd + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::string report;
  try {
    report = dispatch(config);
  } catch (const FileError& f) {
    err << f.path;
    if (f.error.line() > 0) err << ':' << f.error.line();
    err << ": " << to_string(f.error.kind()) << ": " << f.error.detail() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_input_error() ? kExitInputError : kExitDomainError;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "error: cannot write '" << *config.output_path << "'\n";
      return kExitInputError;
    }
    file << report;
  } else {
    out << report;
  }
  if (config.verbosity > 0) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << config.command << " finished in " << secs << " s\n";
  }
  return kExitOk;
}

}  // namespace atlas
