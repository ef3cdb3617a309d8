#include <algorithm>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "ekr/report.hpp"

namespace {

const std::map<std::string, ekr::group::Family> kFamilies = {
    {"gl", ekr::group::Family::kGL},   {"sl", ekr::group::Family::kSL},   {"agl", ekr::group::Family::kAGL},
    {"pgl", ekr::group::Family::kPGL}, {"psl", ekr::group::Family::kPSL},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdos-Ko-Rado computations for 2-dimensional linear groups"};
  app.require_subcommand(1);

  ekr::report::RunConfig cfg;
  std::string format = "json";

  auto group_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "gl, sl, agl, pgl or psl")
        ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
    sub->add_option("--q", cfg.q, "field size (prime power)")->check(CLI::Range(2, 64));
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--central-seed", cfg.central_seed, "seed for the central-character split")
        ->capture_default_str();
    sub->add_option("--sample-seed", cfg.sample_seed, "seed for sampled certificate verification")
        ->capture_default_str();
  };
  auto weights = [&](CLI::App* sub) {
    sub->add_option("--weights", cfg.weights, "unit, table, lp or file")
        ->check(CLI::IsMember({"unit", "table", "lp", "file"}));
    sub->add_option("--weights-file", cfg.weights_file, "JSON array of per-class weights");
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the (weighted) derangement graph");
  group_opts(spectrum);
  weights(spectrum);
  common(spectrum);

  auto* wcmd = app.add_subcommand("weights", "class weighting (canonical for GL/SL, LP otherwise)");
  group_opts(wcmd);
  common(wcmd);

  auto* lp = app.add_subcommand("lp", "class-weight linear program");
  group_opts(lp);
  common(lp);

  auto* bounds = app.add_subcommand("bounds", "ratio and clique-coclique bounds");
  group_opts(bounds);
  weights(bounds);
  bounds->add_option("--budget", cfg.budget_seconds, "clique search budget in seconds");
  common(bounds);

  auto* construct = app.add_subcommand("construct", "build and verify an explicit set");
  construct->add_option("name", cfg.construction, "singer line agl-cycle block pgl-2int agl-lift psl-stab")
      ->required()
      ->check(CLI::IsMember({"singer", "line", "agl-cycle", "block", "pgl-2int", "agl-lift", "psl-stab"}));
  group_opts(construct);
  construct->add_option("--line", cfg.line, "projective index of the line (default q)");
  construct->add_option("-o,--output", cfg.output, "write the certificate here");
  common(construct);

  auto* search = app.add_subcommand("search", "exact maximum coclique, clique or 2-intersecting set");
  group_opts(search);
  search->add_option("--mode", cfg.mode, "auto, coclique, clique or 2int")
      ->check(CLI::IsMember({"auto", "coclique", "clique", "2int"}));
  search->add_option("--reduction", cfg.reduction, "none, identity or classes")
      ->check(CLI::IsMember({"none", "identity", "classes"}));
  search->add_option("--budget", cfg.budget_seconds, "time budget in seconds (<= 0: unlimited)");
  search->add_option("-o,--output", cfg.output, "write the certificate here");
  common(search);

  auto* gram = app.add_subcommand("gram", "Gram spectra of canonical characteristic vectors (gl or sl)");
  group_opts(gram);
  common(gram);

  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("certificate", cfg.input, "certificate JSON")->required();
  common(verify);

  auto* reproduce = app.add_subcommand("reproduce", "run every acceptance criterion");
  reproduce->add_option("--q-list", cfg.q_list, "restrict every criterion to these q")->expected(0, -1);
  reproduce->add_option("--budget", cfg.budget_seconds, "per-search budget in seconds");
  common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ekr::report::kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.q_list_given = reproduce->count("--q-list") > 0;
  // A bare --q-list yields one empty token, which CLI11 converts to 0.
  const auto& raw = reproduce->get_option("--q-list")->results();
  if (std::all_of(raw.begin(), raw.end(), [](const std::string& s) { return s.empty(); })) cfg.q_list.clear();
  cfg.format = ekr::report::parse_format(format);
  return ekr::report::run(cfg, std::cout, std::cerr);
}
