#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ekr/group.hpp"
#include "ekr/report.hpp"

using ekr::group::Family;
using ekr::report::RunConfig;
namespace report = ekr::report;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(RunConfig cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = report::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(const std::string& sub, Family f, int q) {
  RunConfig c;
  c.subcommand = sub;
  c.family = f;
  c.q = q;
  return c;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("spectrum with canonical weights") {
  auto c = config("spectrum", Family::kGL, 5);
  c.weights = "table";
  const auto r = run(c);
  REQUIRE(r.code == report::kExitOk);
  const auto j = r.json();
  CHECK(j["spectrum"]["max"].get<double>() == doctest::Approx(23));
  CHECK(j["spectrum"]["min"].get<double>() == doctest::Approx(-1));
  CHECK(j["ratio_bound"].get<double>() == doctest::Approx(20));
}

TEST_CASE("spectrum CSV has a header and one line per character") {
  auto c = config("spectrum", Family::kSL, 3);
  c.format = report::Format::kCsv;
  const auto r = run(c);
  REQUIRE(r.code == report::kExitOk);
  CHECK(r.out.rfind("character_label,eigenvalue,multiplicity\n", 0) == 0);
  const auto lines = std::count(r.out.begin(), r.out.end(), '\n');
  CHECK(lines == 1 + 7);  // SL(2,3) has seven classes
}

TEST_CASE("LP bound for AGL(2,3)") {
  const auto r = run(config("lp", Family::kAGL, 3));
  REQUIRE(r.code == report::kExitOk);
  const auto j = r.json();
  CHECK(j["lp"]["rounded"] == 5);
  CHECK(j["lp"]["status"] == "optimal");
}

TEST_CASE("clique-coclique bound for GL(2,3)") {
  const auto j = run(config("bounds", Family::kGL, 3)).json();
  CHECK(j["clique_size"] == 8);
  CHECK(j["clique_coclique_bound"] == 6);
}

TEST_CASE("construct, save and verify round trip") {
  const auto path = temp_path("ekr_report_cert.json");
  auto c = config("construct", Family::kPGL, 7);
  c.construction = "pgl-2int";
  c.output = path;
  REQUIRE(run(c).code == report::kExitOk);

  auto v = config("verify", Family::kGL, 3);
  v.input = path;
  const auto ok = run(v);
  CHECK(ok.code == report::kExitOk);

  // A derangement next to the identity breaks the claim.
  const auto pgl = ekr::group::GroupContext::build(Family::kPGL, 7);
  int derangement = 1;
  while (pgl.fix_count(derangement) != 0) ++derangement;
  std::ifstream in(path);
  auto cert = nlohmann::json::parse(in);
  in.close();
  cert["ids"][1] = derangement;
  std::ofstream(path) << cert.dump();
  CHECK(run(v).code == report::kExitMismatch);
  std::remove(path.c_str());
  CHECK(run(v).code == report::kExitUsage);
}

TEST_CASE("exact 2-intersecting search") {
  auto c = config("search", Family::kPGL, 5);
  c.mode = "2int";
  const auto r = run(c);
  REQUIRE(r.code == report::kExitOk);
  CHECK(r.json()["certificate"]["size"] == 5);
}

TEST_CASE("search output is byte-identical across runs") {
  auto c = config("search", Family::kSL, 3);
  c.mode = "coclique";
  CHECK(run(c).out == run(c).out);
}

TEST_CASE("exhausted budget exits with the budget code") {
  auto c = config("search", Family::kPGL, 13);
  c.mode = "2int";
  c.reduction = "identity";
  c.budget_seconds = 1e-4;
  CHECK(run(c).code == report::kExitBudget);
}

TEST_CASE("gram subcommand") {
  const auto r = run(config("gram", Family::kGL, 3));
  CHECK(r.code == report::kExitOk);
  const auto j = r.json();
  CHECK(j["rank"] == j["expected_rank"]);
}

TEST_CASE("usage errors") {
  CHECK(run(config("spectrum", Family::kGL, 6)).code == report::kExitUsage);
  CHECK(run(config("nonsense", Family::kGL, 3)).code == report::kExitUsage);
  auto c = config("construct", Family::kGL, 3);
  c.construction = "nonsense";
  CHECK(run(c).code == report::kExitUsage);
  auto w = config("spectrum", Family::kGL, 3);
  w.weights = "file";
  w.weights_file = temp_path("ekr_missing_weights.json");
  CHECK(run(w).code == report::kExitUsage);
}

TEST_CASE("reproduce with an empty q list is a no-op") {
  auto c = config("reproduce", Family::kGL, 3);
  c.q_list_given = true;
  const auto r = run(c);
  CHECK(r.code == report::kExitOk);
  CHECK(r.json()["criteria"].empty());
}
