#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "atlas/cli.hpp"
#include "atlas/cochain.hpp"
#include "atlas/cohomology.hpp"

using namespace atlas;

namespace {

const std::string kData = ATLAS_DATA_DIR;

std::string group_file(const std::string& name) { return kData + "/groups/" + name + ".grp"; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(std::string command, const std::string& group) {
  RunConfig cfg;
  cfg.command = std::move(command);
  cfg.group_path = group_file(group);
  return cfg;
}

std::string last_line(const std::string& text) {
  std::string t = text;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

// Text between a line equal to `open` and the next `END` line.
std::string block(const std::string& text, const std::string& open) {
  const std::size_t start = text.find(open + "\n");
  if (start == std::string::npos) return "";
  const std::size_t body = start + open.size() + 1;
  return text.substr(body, text.find("\nEND\n", body) - body + 1);
}

Outcome shell(const std::string& args) {
  const std::string cmd = std::string(ATLAS_CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST_CASE("cohomology command", "[cli]") {
  RunConfig cfg = config("cohomology", "z2");
  cfg.degree = 3;
  Outcome r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("H^3 = Z/2\n", 0) == 0);
  CHECK(r.out.find("GENERATOR 0 order 2") != std::string::npos);

  cfg.seed = 7;
  Outcome checked = invoke(cfg);
  CHECK(checked.code == kExitOk);
  CHECK(checked.out.find("CHECK seed=7") != std::string::npos);
}

TEST_CASE("emitted cocycles re-parse as cocycles", "[cli][property]") {
  for (const std::string name : {"z2", "z3", "z4", "v4", "s3"}) {
    GroupPtr g = load_group_file(group_file(name));
    for (std::size_t degree = 1; degree <= 4; ++degree) {
      RunConfig cfg = config("cohomology", name);
      cfg.degree = degree;
      Outcome r = invoke(cfg);
      REQUIRE(r.code == kExitOk);
      auto h = cohomology_group(g, degree);
      std::size_t parsed = 0;
      for (std::size_t i = 0; i < h->invariant_factors.size(); ++i) {
        std::string text = block(r.out, "GENERATOR " + std::to_string(i) + " order " + std::to_string(h->invariant_factors[i]));
        REQUIRE_FALSE(text.empty());
        Cochain c = load_cochain(text, g);
        REQUIRE(is_cocycle(c));
        Exponents unit(h->invariant_factors.size(), 0);
        unit[i] = 1;
        REQUIRE(class_of(c, *h) == unit);
        ++parsed;
      }
      CHECK(parsed == h->invariant_factors.size());
    }
  }
}

TEST_CASE("classification summaries", "[cli]") {
  CHECK(last_line(invoke(config("lagrangian1", "s3")).out) == "SUMMARY records=4 weighted_count=4 rejected=0");
  CHECK(last_line(invoke(config("lagrangian1", "v4")).out) == "SUMMARY records=5 weighted_count=6 rejected=0");
  CHECK(last_line(invoke(config("lagrangian2", "z2")).out) == "SUMMARY records=2 weighted_count=3 rejected=0");

  RunConfig twisted = config("lagrangian1", "z2");
  twisted.cocycle_path = kData + "/cocycles/z2_omega.coc";
  Outcome r = invoke(twisted);
  CHECK(r.code == kExitOk);
  CHECK(last_line(r.out) == "SUMMARY records=1 weighted_count=1 rejected=1");

  RunConfig rep = config("etale2rep", "z2");
  rep.metric_paths = {kData + "/metrics/z3_form.met"};
  CHECK(last_line(invoke(rep).out).rfind("SUMMARY records=3 ", 0) == 0);

  RunConfig sk = config("etale2", "z2");
  sk.metric_paths = {kData + "/metrics/semion.met"};
  Outcome s = invoke(sk);
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("UNVERIFIED_HIGHER_DATA") != std::string::npos);

  RunConfig e1 = config("etale1", "z2");
  CHECK(last_line(invoke(e1).out).rfind("SUMMARY records=3 ", 0) == 0);

  RunConfig center = config("center", "s3");
  center.degree = 4;
  Outcome c = invoke(center);
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("centralizer_label: S3") != std::string::npos);
}

TEST_CASE("transgress command output re-parses", "[cli]") {
  RunConfig cfg = config("transgress", "v4");
  cfg.cocycle_path = kData + "/cocycles/v4_pi.coc";
  cfg.element = 1;
  Outcome r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  GroupPtr z = load_group(block(r.out, "GROUP"));
  CHECK(z->order() == 4);
  Cochain tau = load_cochain(block(r.out, "COCYCLE"), z);
  CHECK(tau.degree == 3);
  CHECK(is_cocycle(tau));
  CHECK(r.out.find("class: (") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  RunConfig bad = config("lagrangian1", "bad_latin");
  Outcome r = invoke(bad);
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("bad_latin.grp") != std::string::npos);

  RunConfig missing = config("lagrangian1", "does_not_exist");
  CHECK(invoke(missing).code == kExitInputError);

  RunConfig quad = config("etale2", "z2");
  quad.metric_paths = {kData + "/metrics/bad_quadratic.met"};
  CHECK(invoke(quad).code == kExitInputError);

  // a Z/3 cochain that is not closed
  const auto tmp = std::filesystem::temp_directory_path() / "atlas_not_closed.coc";
  std::ofstream(tmp) << "cocycle w degree 3 group Z3\n1 1 1 1/2\n";
  RunConfig domain = config("lagrangian1", "z3");
  domain.cocycle_path = tmp.string();
  CHECK(invoke(domain).code == kExitDomainError);

  const auto malformed = std::filesystem::temp_directory_path() / "atlas_malformed.grp";
  std::ofstream(malformed) << "group M\norder 2\ntable\n0 1\n1 x\n";
  RunConfig syntax = config("lagrangian1", "z2");
  syntax.group_path = malformed.string();
  Outcome m = invoke(syntax);
  CHECK(m.code == kExitInputError);
  CHECK(m.err.find(":5:") != std::string::npos);

  RunConfig deg = config("cohomology", "z2");
  deg.degree = 0;
  CHECK(invoke(deg).code == kExitInputError);

  RunConfig seeded = config("lagrangian1", "z2");
  seeded.seed = 1;
  CHECK(invoke(seeded).code != kExitOk);
}

TEST_CASE("output files", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "atlas_report.txt";
  RunConfig cfg = config("lagrangian1", "s3");
  cfg.output_path = path.string();
  Outcome r = invoke(cfg);
  REQUIRE(r.code == kExitOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == invoke(config("lagrangian1", "s3")).out);
}

TEST_CASE("binary: determinism and exit status", "[cli][binary]") {
  const std::string args = "etale1 --group " + group_file("s3");
  Outcome a = shell(args), b = shell(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  CHECK(shell("lagrangian1 --group " + group_file("bad_latin")).code == 2);
  CHECK(shell("lagrangian1").code == 2);
  CHECK(shell("no-such-command --group x").code == 2);
  CHECK(last_line(shell("lagrangian1 --group " + group_file("s3")).out) == "SUMMARY records=4 weighted_count=4 rejected=0");
  Outcome t = shell("transgress --group " + group_file("v4") + " --cocycle " + kData + "/cocycles/v4_pi.coc --element 1");
  CHECK(t.code == 0);
  CHECK(t.out.find("centralizer_label: Z/2 x Z/2") != std::string::npos);
}
