#include "ekr/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <fmt/format.h>

#include "ekr/acceptance.hpp"
#include "ekr/constructions.hpp"
#include "ekr/ekr_checks.hpp"
#include "ekr/error.hpp"
#include "ekr/lp.hpp"
#include "ekr/search.hpp"
#include "ekr/spectra.hpp"

namespace ekr::report {
namespace {

using group::Family;
using group::GroupContext;
using nlohmann::json;

std::string family_q(const GroupContext& ctx) { return fmt::format("{}(2,{})", group::family_name(ctx.family()), ctx.q()); }

json header(const RunConfig& cfg, const GroupContext& ctx) {
  return {{"command", cfg.subcommand}, {"group", family_q(ctx)}, {"order", ctx.order()}, {"degree", ctx.degree()}};
}

bool gl_or_sl(Family f) { return f == Family::kGL || f == Family::kSL; }

// Descriptive id of the eigenvalue table a GL/SL weighted run mirrors.
std::string weighted_table_id(Family f, int q) {
  if (f == Family::kGL) return "gl-weighted-eigenvalues";
  if (q % 2 == 0) return "sl-weighted-eigenvalues-even";
  return q % 4 == 1 ? "sl-weighted-eigenvalues-1mod4" : "sl-weighted-eigenvalues-3mod4";
}

std::string weights_table_id(Family f, int q) {
  if (f == Family::kGL) return "gl-weights";
  return q % 2 ? "sl-weights-odd" : "sl-weights-even";
}

spectra::Weights load_weights(const std::string& path, const GroupContext& ctx) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open weights file " + path);
  json j;
  try {
    in >> j;
    const json& arr = j.is_object() ? j.at("weights") : j;
    auto w = arr.get<spectra::Weights>();
    if (w.size() != ctx.classes().size()) {
      throw Error(ErrorKind::kInvalidInput,
                  fmt::format("weights file lists {} values for {} classes", w.size(), ctx.classes().size()));
    }
    return w;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, path + ": " + e.what());
  }
}

struct Weighted {
  spectra::Weights w;
  json detail;
};

Weighted weights_for(const RunConfig& cfg, const GroupContext& ctx, const chars::CharacterTable& table) {
  if (cfg.weights == "unit") return {spectra::unit_weights(ctx), "unit"};
  if (cfg.weights == "table") {
    if (!gl_or_sl(ctx.family())) throw Error(ErrorKind::kInvalidInput, "--weights table needs GL or SL");
    return {spectra::canonical_weights(ctx), weights_table_id(ctx.family(), ctx.q())};
  }
  if (cfg.weights == "lp") {
    const auto inst = lp::build_lp(ctx, table);
    const auto res = lp::solve_lp(inst);
    return {lp::class_weights(ctx, inst, res), {{"lp", lp::to_json(res)}}};
  }
  if (cfg.weights == "file") return {load_weights(cfg.weights_file, ctx), cfg.weights_file};
  throw Error(ErrorKind::kInvalidInput, "unknown weights source '" + cfg.weights + "'");
}

int emit(const RunConfig& cfg, std::ostream& out, const json& j, const std::string& text, const std::string& csv) {
  switch (cfg.format) {
    case Format::kJson: out << j.dump(2) << "\n"; break;
    case Format::kText: out << (text.empty() ? j.dump(2) + "\n" : text); break;
    case Format::kCsv:
      if (csv.empty()) throw Error(ErrorKind::kInvalidInput, "csv output is not available for " + cfg.subcommand);
      out << csv;
      break;
  }
  return kExitOk;
}

void save_certificate(const RunConfig& cfg, const cert::Certificate& c) {
  if (!cfg.output.empty()) cert::save(c, cfg.output);
}

// ------------------------------------------------------------ subcommands

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = GroupContext::build(cfg.family, cfg.q);
  const auto table = chars::character_table(ctx, cfg.central_seed);
  const auto wt = weights_for(cfg, ctx, table);
  const auto rep = spectra::spectrum(ctx, table, wt.w);
  const double ratio = spectra::ratio_bound(rep);
  json j = header(cfg, ctx);
  j["weights"] = wt.detail;
  j["spectrum"] = spectra::to_json(rep);
  j["ratio_bound"] = ratio;
  std::string text = fmt::format("{} weights={}\n", family_q(ctx), cfg.weights) + spectra::to_text(rep);

  std::optional<spectra::RationalTableCheck> exact;
  if (ctx.family() == Family::kGL && cfg.weights == "unit") exact = spectra::gl_unit_check(cfg.q);
  if (ctx.family() == Family::kGL && cfg.weights == "table") exact = spectra::gl_weighted_check(cfg.q);
  if (ctx.family() == Family::kSL && cfg.weights == "table") exact = spectra::sl_weighted_check(cfg.q);
  if (exact) {
    j["exact"] = spectra::to_json(*exact);
    j["exact"]["table"] = cfg.weights == "unit" ? "gl-unit-eigenvalues" : weighted_table_id(ctx.family(), cfg.q);
    text += "\n" + spectra::to_text(*exact);
  }
  return emit(cfg, out, j, text, spectra::to_csv(rep));
}

int cmd_weights(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = GroupContext::build(cfg.family, cfg.q);
  json j = header(cfg, ctx);
  std::string text;
  std::string csv = "class,representative,size,fix,weight\n";
  spectra::Weights w;
  if (gl_or_sl(ctx.family())) {
    const auto cw = ctx.family() == Family::kGL ? spectra::gl_category_weights(cfg.q) : spectra::sl_category_weights(cfg.q);
    j["table"] = weights_table_id(ctx.family(), cfg.q);
    json cats = json::object();
    for (int c = 0; c < 4; ++c) {
      cats[fmt::format("c{}", c + 1)] = spectra::format_rational(cw.w[c]);
      text += fmt::format("c{}  {}\n", c + 1, spectra::format_rational(cw.w[c]));
    }
    j["categories"] = cats;
    w = spectra::canonical_weights(ctx);
  } else {
    const auto table = chars::character_table(ctx, cfg.central_seed);
    const auto inst = lp::build_lp(ctx, table);
    const auto res = lp::solve_lp(inst);
    j["table"] = "lp-weights";
    j["lp"] = lp::to_json(res);
    w = lp::class_weights(ctx, inst, res);
  }
  json per_class = json::array();
  const auto& classes = ctx.classes();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    per_class.push_back({{"class", k}, {"representative", classes[k].representative}, {"size", classes[k].size},
                         {"fix", classes[k].fix}, {"weight", w[k]}});
    csv += fmt::format("{},{},{},{},{:.17g}\n", k, classes[k].representative, classes[k].size, classes[k].fix, w[k]);
    text += fmt::format("class {:>3} size {:>6} fix {:>3} weight {:.9g}\n", k, classes[k].size, classes[k].fix, w[k]);
  }
  j["classes"] = per_class;
  return emit(cfg, out, j, text, csv);
}

int cmd_lp(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = GroupContext::build(cfg.family, cfg.q);
  const auto table = chars::character_table(ctx, cfg.central_seed);
  const auto inst = lp::build_lp(ctx, table);
  const auto res = lp::solve_lp(inst);
  json j = header(cfg, ctx);
  j["lp"] = lp::to_json(res);
  j["ratio"] = res.objective;
  const double bound = ctx.order() / (1.0 + res.objective);
  j["bound"] = std::floor(bound + 1e-9);
  std::string text = fmt::format("{} LP {} ratio {:.9g} bound {}\n", family_q(ctx), lp::status_name(res.status),
                                 res.objective, std::floor(bound + 1e-9));
  if (ctx.family() == Family::kAGL) {
    const auto c = lp::agl_rank3_check(ctx, lp::class_weights(ctx, inst, res));
    j["rank3"] = {{"a0", c.a0},
                  {"sum_ai", c.sum_ai},
                  {"lambda_chi1", c.lambda_chi1},
                  {"lambda_chi2", c.lambda_chi2},
                  {"closed_forms_hold", c.closed_forms_hold},
                  {"a0_within", c.a0_within},
                  {"sum_within", c.sum_within}};
  } else {
    const auto c = lp::lp_ceiling_check(ctx, table, res);
    j["ceiling"] = {{"n_minus_1", c.degree - 1},
                    {"attained", c.attains_ceiling},
                    {"constituents", c.constituents},
                    {"constituents_tight", c.constituents_tight}};
  }
  std::string csv = "variable,classes,weight\n";
  for (std::size_t v = 0; v < inst.variable_classes.size(); ++v) {
    std::string cls;
    for (int c : inst.variable_classes[v]) cls += (cls.empty() ? "" : " ") + std::to_string(c);
    csv += fmt::format("{},{},{:.17g}\n", v, cls, res.weights[v]);
  }
  emit(cfg, out, j, text, csv);
  if (res.status == lp::LPStatus::kIterationLimit) return kExitBudget;
  return res.status == lp::LPStatus::kOptimal ? kExitOk : kExitMismatch;
}

// Best available clique: explicit where the family has one, else a search.
cert::Certificate clique_for(const RunConfig& cfg, const GroupContext& ctx) {
  if (ctx.family() == Family::kGL) return constructions::singer_clique(ctx);
  if (ctx.family() == Family::kAGL) return constructions::agl_cycle_clique(ctx);
  search::SearchOptions o;
  o.budget_seconds = cfg.budget_seconds;
  o.reduction = search::Reduction::kIdentity;
  const auto outcome = search::max_clique(group::derangement_graph(ctx), o);
  return search::to_certificate(ctx, outcome, cert::Kind::kClique);
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = GroupContext::build(cfg.family, cfg.q);
  const auto table = chars::character_table(ctx, cfg.central_seed);
  const auto wt = weights_for(cfg, ctx, table);
  const auto rep = spectra::spectrum(ctx, table, wt.w);
  const auto clique = clique_for(cfg, ctx);
  const auto ver = cert::verify(clique, ctx);
  if (!ver.ok) throw Error(ErrorKind::kVerification, "clique failed verification: " + ver.failure);
  json j = header(cfg, ctx);
  j["weights"] = wt.detail;
  j["max"] = rep.max;
  j["min"] = rep.min;
  j["ratio_bound"] = spectra::ratio_bound(rep);
  j["clique_size"] = clique.size();
  j["clique_coclique_bound"] = spectra::clique_coclique_bound(ctx.order(), static_cast<long long>(clique.size()));
  j["canonical_size"] = ctx.order() / ctx.degree();
  const std::string text =
      fmt::format("{} ratio bound {:.9g} (max {:.9g}, min {:.9g}); clique {} -> clique-coclique bound {}\n",
                  family_q(ctx), spectra::ratio_bound(rep), rep.max, rep.min, clique.size(),
                  j["clique_coclique_bound"].get<long long>());
  return emit(cfg, out, j, text, {});
}

cert::Certificate build_construction(const RunConfig& cfg, const GroupContext& ctx) {
  const auto& name = cfg.construction;
  if (name == "singer") return constructions::singer_clique(ctx);
  if (name == "line") return constructions::line_stabilizer_coclique(ctx, cfg.line < 0 ? cfg.q : cfg.line);
  if (name == "agl-cycle") return constructions::agl_cycle_clique(ctx);
  if (name == "block") return constructions::block_stabilizer(ctx);
  if (name == "pgl-2int") return constructions::pgl_two_intersecting(ctx);
  if (name == "psl-stab") return constructions::psl_setwise_stabilizer(ctx);
  if (name == "agl-lift") {
    const auto pgl = GroupContext::build(Family::kPGL, cfg.q);
    return constructions::agl_lift(ctx, pgl, constructions::pgl_two_intersecting(pgl));
  }
  throw Error(ErrorKind::kInvalidInput, "unknown construction '" + name + "'");
}

Family construction_family(const std::string& name, Family given) {
  if (name == "singer" || name == "line") return Family::kGL;
  if (name == "agl-cycle" || name == "block" || name == "agl-lift") return Family::kAGL;
  if (name == "pgl-2int") return Family::kPGL;
  if (name == "psl-stab") return Family::kPSL;
  return given;
}

json verification_json(const cert::VerifyReport& v) {
  return {{"ok", v.ok}, {"exhaustive", v.exhaustive}, {"pairs_checked", v.pairs_checked}, {"failure", v.failure}};
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = GroupContext::build(construction_family(cfg.construction, cfg.family), cfg.q);
  const auto c = build_construction(cfg, ctx);
  cert::VerifyOptions vo;
  vo.seed = cfg.sample_seed;
  const auto ver = cert::verify(c, ctx, vo);
  json j = header(cfg, ctx);
  j["construction"] = cfg.construction;
  j["certificate"] = cert::to_json(c);
  j["verification"] = verification_json(ver);
  if (cfg.construction == "line") j["canonical"] = constructions::equals_canonical_set(ctx, c.ids);
  if (cfg.construction == "line" || cfg.construction == "singer") {
    j["coset_slices"] = checks::coset_slice_profile(ctx, c.ids);
  }
  save_certificate(cfg, c);
  const std::string text = fmt::format("{} {} size {} {}\n", family_q(ctx), cfg.construction, c.size(),
                                       ver.ok ? "verified" : "FAILED: " + ver.failure);
  emit(cfg, out, j, text, {});
  return ver.ok ? kExitOk : kExitMismatch;
}

search::Reduction parse_reduction(const std::string& s) {
  if (s == "none") return search::Reduction::kNone;
  if (s == "identity") return search::Reduction::kIdentity;
  if (s == "classes") return search::Reduction::kClasses;
  throw Error(ErrorKind::kInvalidInput, "unknown reduction '" + s + "'");
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = GroupContext::build(cfg.family, cfg.q);
  const bool projective = cfg.family == Family::kPGL || cfg.family == Family::kPSL;
  std::string mode = cfg.mode;
  if (mode == "auto") mode = projective ? "2int" : "coclique";
  search::SearchOptions o;
  o.budget_seconds = cfg.budget_seconds;
  o.reduction = parse_reduction(cfg.reduction);
  search::SearchOutcome res;
  cert::Kind kind = cert::Kind::kCoclique;
  if (mode == "2int") {
    if (!projective) throw Error(ErrorKind::kInvalidInput, "2-intersecting search needs PGL or PSL");
    res = search::max_two_intersecting(ctx, o);
    kind = cert::Kind::kTwoIntersecting;
  } else if (mode == "coclique") {
    res = search::max_coclique_cayley(ctx, group::derangement_graph(ctx), o);
  } else if (mode == "clique") {
    if (o.reduction == search::Reduction::kClasses) o.reduction = search::Reduction::kIdentity;
    res = search::max_clique(group::derangement_graph(ctx), o);
    kind = cert::Kind::kClique;
  } else {
    throw Error(ErrorKind::kInvalidInput, "unknown search mode '" + mode + "'");
  }
  const auto c = search::to_certificate(ctx, res, kind);
  const auto ver = cert::verify(c, ctx);
  json j = header(cfg, ctx);
  j["mode"] = mode;
  j["reduction"] = cfg.reduction;
  j["outcome"] = search::to_json(res);
  j["certificate"] = cert::to_json(c);
  j["verification"] = verification_json(ver);
  if (ctx.family() == Family::kAGL && mode == "coclique") {
    j["coset_profile"] = {
        {"translations", constructions::left_coset_profile(ctx, res.best, constructions::translation_subgroup(ctx))},
        {"block_kernel", constructions::left_coset_profile(ctx, res.best, constructions::block_stabilizer(ctx).ids)}};
  }
  if (projective && mode == "2int") {
    j["table"] = cfg.family == Family::kPGL ? "pgl-max-2-intersecting" : "psl-max-2-intersecting";
  }
  save_certificate(cfg, c);
  const std::string text = fmt::format("{} max {} {} ({}, {} nodes)\n", family_q(ctx), mode, res.size(),
                                       res.optimal ? "proved" : "lower bound, budget exhausted", res.nodes);
  emit(cfg, out, j, text, {});
  if (!ver.ok) return kExitMismatch;
  return res.optimal ? kExitOk : kExitBudget;
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  checks::GramReport r;
  if (cfg.family == Family::kGL) {
    r = checks::gl_spanning_gram(cfg.q);
  } else if (cfg.family == Family::kSL) {
    r = checks::sl_gram(cfg.q);
  } else {
    throw Error(ErrorKind::kInvalidInput, "gram supports gl and sl");
  }
  json j = checks::to_json(r);
  j["command"] = "gram";
  j["group"] = fmt::format("{}(2,{})", group::family_name(cfg.family), cfg.q);
  std::string text = fmt::format("{} rank {} (expected {})\n", j["group"].get<std::string>(), r.rank, r.expected_rank);
  for (const auto& it : r.observed) text += fmt::format("  {:>10g} x {}\n", it.value, it.multiplicity);
  text += fmt::format("stated spectrum {}; identity {}\n", r.printed_matches() ? "matches" : "differs",
                      r.identity_holds ? "holds" : "fails");
  emit(cfg, out, j, text, {});
  return r.rank_matches() && r.expected_matches() && r.identity_holds ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!std::filesystem::exists(cfg.input)) throw Error(ErrorKind::kInvalidInput, "no such file: " + cfg.input);
  json j = {{"command", "verify"}, {"input", cfg.input}};
  cert::VerifyReport ver;
  try {
    const auto c = cert::load(cfg.input);
    cert::VerifyOptions vo;
    vo.seed = cfg.sample_seed;
    ver = cert::verify(c, vo);
    j["certificate"] = {{"family", group::family_name(c.family)}, {"q", c.q}, {"kind", cert::kind_name(c.kind)},
                        {"size", c.size()}};
  } catch (const Error& e) {
    ver.failure = e.what();
  }
  j["verification"] = verification_json(ver);
  emit(cfg, out, j, ver.ok ? "verified\n" : "verification failed: " + ver.failure + "\n", {});
  return ver.ok ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  acceptance::Options o;
  if (cfg.q_list_given) o.q_list = cfg.q_list;
  o.search_budget_seconds = cfg.budget_seconds;
  const auto results = acceptance::reproduce_all(o);
  bool ok = true;
  std::string text;
  double total = 0.0;
  for (const auto& c : results) {
    ok = ok && c.pass();
    total += c.seconds;
    text += acceptance::summary_line(c) + "\n";
  }
  text += fmt::format("total {:.1f} s\n", total);
  emit(cfg, out, {{"criteria", acceptance::to_json(results)}, {"seconds", total}, {"pass", ok}}, text, {});
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "text") return Format::kText;
  throw Error(ErrorKind::kInvalidInput, "unknown format '" + s + "'");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto& s = cfg.subcommand;
    if (s == "spectrum") return cmd_spectrum(cfg, out);
    if (s == "weights") return cmd_weights(cfg, out);
    if (s == "lp") return cmd_lp(cfg, out);
    if (s == "bounds") return cmd_bounds(cfg, out);
    if (s == "construct") return cmd_construct(cfg, out);
    if (s == "search") return cmd_search(cfg, out);
    if (s == "gram") return cmd_gram(cfg, out);
    if (s == "verify") return cmd_verify(cfg, out);
    if (s == "reproduce") return cmd_reproduce(cfg, out);
    err << "unknown subcommand '" << s << "'\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kInvalidInput:
      case ErrorKind::kDomain: return kExitUsage;
      case ErrorKind::kBudget: return kExitBudget;
      case ErrorKind::kVerification:
      case ErrorKind::kNumeric: return kExitMismatch;
    }
    return kExitUsage;
  }
}

}  // namespace ekr::report
