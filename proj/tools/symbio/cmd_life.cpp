#include <fstream>
#include <sstream>

#include "report.hpp"
#include "symbio/gun.hpp"
#include "symbio/life.hpp"
#include "symbio/protocell.hpp"
#include "symbio/search.hpp"

#ifndef SYMBIO_DATA_DIR
#define SYMBIO_DATA_DIR "data"
#endif

namespace symbio::cli {

namespace {

using namespace symbio::life;

CellSet load_pattern(const std::string& arg) {
  if (arg == "glider") return glider();
  if (arg == "gun") return load_rle_file(std::string(SYMBIO_DATA_DIR) + "/gosper_gun.rle");
  return load_rle_file(arg);
}

Json check_json(const SubCheck& s) {
  Json j{{"name", s.name}, {"steps", s.steps}, {"holds", s.holds}, {"residue", s.residue}, {"detail", s.detail}};
  j["motion"] = s.motion ? motion_json(*s.motion) : Json(nullptr);
  return j;
}

proto::Params load_params(const std::string& path, const proto::Params& base) {
  proto::Params p = base;
  if (path.empty()) return p;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const Json j = Json::parse(in);
  p.p_bond = j.value("p_bond", p.p_bond);
  p.p_decay = j.value("p_decay", p.p_decay);
  p.p_move = j.value("p_move", p.p_move);
  p.catalyst_radius = j.value("catalyst_radius", p.catalyst_radius);
  p.bond_boost = j.value("bond_boost", p.bond_boost);
  p.decay_damp = j.value("decay_damp", p.decay_damp);
  p.validate();
  return p;
}

Json params_json(const proto::Params& p) {
  return Json{{"p_bond", p.p_bond},           {"p_decay", p.p_decay},       {"p_move", p.p_move},
              {"catalyst_radius", p.catalyst_radius}, {"bond_boost", p.bond_boost}, {"decay_damp", p.decay_damp}};
}

Json summary_json(const proto::RunSummary& r) {
  return Json{{"seed", r.seed},
              {"catalysts", r.catalysts},
              {"final_membranes", r.final_membranes},
              {"mean_membranes", r.mean_membranes},
              {"final_bonds", r.final_bonds}};
}

}  // namespace

void register_life(CLI::App& app, Options& opts, RunReport& report) {
  auto* lf = app.add_subcommand("life", "Game of Life (B3/S23)");
  lf->require_subcommand(1);

  auto* run = lf->add_subcommand("run", "Evolve a pattern");
  static std::string run_file;
  static unsigned run_steps = 1;
  static bool run_render = false, run_rle = false;
  run->add_option("pattern", run_file, "RLE file, or 'glider' / 'gun'")->required();
  run->add_option("--steps", run_steps, "Generations")->check(CLI::Range(0u, 100000u));
  run->add_flag("--render", run_render, "Draw the final pattern");
  run->add_flag("--rle", run_rle, "Print the final pattern as RLE");
  run->callback([&] {
    report.command = "life run";
    const CellSet start = load_pattern(run_file);
    const CellSet end = life_run(start, run_steps);
    report.input = {{"pattern", run_file}, {"steps", run_steps}, {"cells", start.size()}};
    report.result = {{"population", end.size()}, {"cells", cells_json(end)}, {"rle", save_rle(end)}};
    std::string text = "generation " + std::to_string(run_steps) + ": " + std::to_string(end.size()) + " cells\n";
    if (run_render) text += render(end, 1);
    if (run_rle) text += save_rle(end);
    report.text = text;
  });

  auto* per = lf->add_subcommand("period", "Least geometric period up to rigid motion");
  static std::string per_file;
  static bool per_residue = false, per_translations = false;
  per->add_option("pattern", per_file, "RLE file, or 'glider' / 'gun'")->required();
  per->add_flag("--residue", per_residue, "Allow leftover cells beside the moved copy");
  per->add_flag("--translations-only", per_translations, "Restrict motions to translations");
  per->callback([&] {
    report.command = "life period";
    const CellSet x = load_pattern(per_file);
    const unsigned budget = opts.max_steps.value_or(100);
    if (budget > 1000) throw UsageError("--max-steps is capped at 1000");
    const MotionGroup group = per_translations ? MotionGroup::Translations : MotionGroup::Full;
    report.input = {{"pattern", per_file},
                    {"max_steps", budget},
                    {"residue", per_residue},
                    {"group", per_translations ? "translations" : "full"}};
    const auto r = detect_geometric_period(x, budget, per_residue, group);
    if (!r) {
      report.result = {{"found", false}};
      report.text = "no period up to " + std::to_string(budget);
      report.ok = false;
      return;
    }
    report.result = period_json(*r);
    report.result["found"] = true;
    std::string text = "period " + std::to_string(r->period) + ", motion " + r->motion.to_string() + ", residue " +
                       std::to_string(r->residue.size()) + " cells";
    if (group == MotionGroup::Full) {
      const auto t = detect_geometric_period(x, budget, per_residue, MotionGroup::Translations);
      report.result["translation_period"] = t ? Json(period_json(*t)) : Json(nullptr);
      if (t && t->period != r->period)
        text += "\ntranslations only: period " + std::to_string(t->period) + ", motion " + t->motion.to_string();
    }
    report.text = text;
  });

  auto* vg = lf->add_subcommand("verify-gun", "Check L^30(GUN) = GUN + GLIDER");
  static std::string vg_file = "gun";
  vg->add_option("pattern", vg_file, "Gun RLE file (default: shipped gun)");
  vg->callback([&] {
    report.command = "life verify-gun";
    const CellSet gun = load_pattern(vg_file);
    const GunEmission e = verify_gun(gun, 4);
    report.input = {{"pattern", vg_file}, {"cells", gun.size()}};
    report.result = {{"restored", e.restored},
                     {"residue", cells_json(e.residue)},
                     {"residue_is_glider", e.residue_is_glider},
                     {"cycles", e.cycles},
                     {"gliders", e.gliders}};
    report.ok = e.ok();
    std::string text = std::string("L^30(gun) contains gun: ") + (e.restored ? "yes" : "no") + "\n";
    text += "residue: " + std::to_string(e.residue.size()) + " cells" + (e.residue_is_glider ? " (a glider)\n" : "\n");
    text += render(e.residue);
    text += "after " + std::to_string(30 * e.cycles) + " steps: " + std::to_string(e.gliders) + " gliders\n";
    text += e.ok() ? "L^30(GUN) = GUN + GLIDER" : "period-30 emission check failed";
    report.text = text;
  });

  auto* sd = lf->add_subcommand("search-d", "Exhaustive search for period-48 seeds in a 6x4 box");
  static int sd_width = 6, sd_height = 4, sd_live = 8;
  static unsigned sd_period = 48;
  static bool sd_render = false;
  sd->add_option("--width", sd_width, "Box width");
  sd->add_option("--height", sd_height, "Box height");
  sd->add_option("--live", sd_live, "Live cells per seed");
  sd->add_option("--period", sd_period, "Target least period")->check(CLI::Range(1u, 120u));
  sd->add_flag("--render", sd_render, "Draw each hit");
  sd->callback([&] {
    report.command = "life search-d";
    SearchOptions o;
    o.width = sd_width;
    o.height = sd_height;
    o.live = sd_live;
    o.period = sd_period;
    o.padding = static_cast<int>(sd_period) + 1;
    o.workers = opts.workers;
    report.input = {{"width", o.width}, {"height", o.height}, {"live", o.live}, {"period", o.period}, {"padding", o.padding}};
    const SearchReport r = search_period(o);
    Json hits = Json::array();
    std::ostringstream text;
    text << "candidates " << r.stats.candidates << ", symmetry classes " << r.stats.classes << ", died "
         << r.stats.died << ", settled " << r.stats.settled << ", alive at " << o.period << " " << r.stats.reached_period
         << ", embedded " << r.stats.embedded << "\n"
         << r.hits.size() << " seeds with least period " << o.period << " and a non-identity motion\n";
    for (const SearchHit& h : r.hits) {
      hits.push_back({{"seed", cells_json(h.seed)}, {"report", period_json(h.report)}});
      text << save_rle(h.seed).substr(save_rle(h.seed).find('\n') + 1);
      text << "  motion " << h.report.motion.to_string() << ", residue " << h.report.residue.size() << "\n";
      if (sd_render) text << render(h.seed) << "\n";
    }
    report.result = {{"candidates", r.stats.candidates}, {"classes", r.stats.classes},     {"died", r.stats.died},
                     {"settled", r.stats.settled},       {"reached", r.stats.reached_period}, {"embedded", r.stats.embedded},
                     {"hits", hits}};
    report.text = text.str();
    report.ok = !r.hits.empty();
  });

  auto* dg = lf->add_subcommand("decompose-gun", "Split the gun into halves and test their half-period behaviour");
  static std::string dg_file = "gun";
  static std::optional<int> dg_cut;
  dg->add_option("pattern", dg_file, "Gun RLE file (default: shipped gun)");
  dg->add_option("--cut", dg_cut, "Evaluate only this cut column");
  dg->callback([&] {
    report.command = "life decompose-gun";
    const CellSet gun = load_pattern(dg_file);
    const GunReport r = verify_gun_decomposition(gun, dg_cut);
    report.input = {{"pattern", dg_file}};
    if (dg_cut) report.input["cut"] = *dg_cut;
    Json cuts = Json::array();
    for (const CutResult& c : r.cuts) {
      Json checks = Json::array();
      for (const SubCheck& s : c.checks) checks.push_back(check_json(s));
      cuts.push_back({{"cut", c.cut}, {"p_cells", c.p_cells}, {"q_cells", c.q_cells}, {"all_hold", c.all_hold()}, {"checks", checks}});
    }
    report.result = {{"emission", period_json(r.emission)},
                     {"left_block", cells_json(r.left_block)},
                     {"right_block", cells_json(r.right_block)},
                     {"cuts", cuts},
                     {"passing_cuts", r.passing_cuts()}};
    report.text = to_text(r);
  });

  // ---- proto ----
  auto* pr = app.add_subcommand("proto", "Substrate/catalyst protocell lattice");
  pr->require_subcommand(1);
  static std::string pr_config;
  static proto::Params pr_params;
  static proto::Experiment pr_exp;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", pr_config, "JSON file with p_bond, p_decay, p_move, catalyst_radius, bond_boost, decay_damp");
    sub->add_option("--steps", pr_exp.steps, "Rounds per run")->check(CLI::Range(0, 1000000));
    sub->add_option("--size", pr_exp.width, "Lattice side")->check(CLI::Range(3, 1024));
    sub->add_option("--substrate", pr_exp.substrate_fraction, "Substrate fraction")->check(CLI::Range(0.0, 1.0));
  };

  auto* prun = pr->add_subcommand("run", "One seeded run");
  static bool prun_render = false;
  add_common(prun);
  prun->add_option("--catalysts", pr_exp.catalysts, "Catalyst count")->check(CLI::Range(0, 100000));
  prun->add_flag("--render", prun_render, "Draw the final lattice");
  prun->callback([&] {
    report.command = "proto run";
    const std::uint64_t seed = require_seed(opts, "proto run");
    pr_exp.height = pr_exp.width;
    const proto::Params p = load_params(pr_config, pr_params);
    proto::State s = proto::State::soup(pr_exp.width, pr_exp.height, pr_exp.catalysts, pr_exp.substrate_fraction, seed);
    long total = 0;
    for (int t = 0; t < pr_exp.steps; ++t) {
      proto::step(s, p);
      total += proto::count_membranes(s);
    }
    report.input = {{"seed", seed}, {"size", pr_exp.width}, {"catalysts", pr_exp.catalysts},
                    {"substrate", pr_exp.substrate_fraction}, {"steps", pr_exp.steps}, {"params", params_json(p)}};
    const int final_m = proto::count_membranes(s);
    const double mean = pr_exp.steps > 0 ? static_cast<double>(total) / pr_exp.steps : 0.0;
    report.result = {{"final_membranes", final_m}, {"mean_membranes", mean}, {"bonds", s.total_bonds()}, {"lattice", s.render()}};
    std::ostringstream text;
    text << "after " << pr_exp.steps << " rounds: " << s.total_bonds() << " bonds, " << final_m
         << " membranes (mean over run " << mean << ")\n";
    if (prun_render) text << s.render();
    report.text = text.str();
  });

  auto* pst = pr->add_subcommand("stats", "Matched runs with one catalyst and with none");
  static int pst_runs = 20;
  add_common(pst);
  pst->add_option("--runs", pst_runs, "Seeds per arm")->check(CLI::Range(1, 10000));
  pst->callback([&] {
    report.command = "proto stats";
    const std::uint64_t seed = require_seed(opts, "proto stats");
    pr_exp.height = pr_exp.width;
    const proto::Params p = load_params(pr_config, pr_params);
    proto::Experiment with = pr_exp, without = pr_exp;
    with.catalysts = 1;
    without.catalysts = 0;
    const auto a = proto::run_many(with, p, seed, pst_runs, opts.workers);
    const auto b = proto::run_many(without, p, seed, pst_runs, opts.workers);
    auto mean_of = [](const std::vector<proto::RunSummary>& rs, auto field) {
      double s = 0;
      for (const auto& r : rs) s += static_cast<double>(field(r));
      return rs.empty() ? 0.0 : s / static_cast<double>(rs.size());
    };
    auto by_mean = [](const proto::RunSummary& r) { return r.mean_membranes; };
    auto by_final = [](const proto::RunSummary& r) { return r.final_membranes; };
    const double ma = mean_of(a, by_mean), mb = mean_of(b, by_mean);
    Json ja = Json::array(), jb = Json::array();
    for (const auto& r : a) ja.push_back(summary_json(r));
    for (const auto& r : b) jb.push_back(summary_json(r));
    report.input = {{"seed", seed}, {"runs", pst_runs}, {"size", pr_exp.width}, {"substrate", pr_exp.substrate_fraction},
                    {"steps", pr_exp.steps}, {"params", params_json(p)}};
    report.result = {{"with_catalyst", {{"mean_membranes", ma}, {"mean_final_membranes", mean_of(a, by_final)}, {"runs", ja}}},
                     {"without_catalyst", {{"mean_membranes", mb}, {"mean_final_membranes", mean_of(b, by_final)}, {"runs", jb}}},
                     {"greater", ma > mb}};
    std::ostringstream text;
    text << "mean membranes per round, 1 catalyst: " << ma << " (final " << mean_of(a, by_final) << ")\n"
         << "mean membranes per round, 0 catalysts: " << mb << " (final " << mean_of(b, by_final) << ")\n"
         << (ma > mb ? "catalyst runs form more membranes" : "no difference in favour of the catalyst");
    report.text = text.str();
  });
}

}  // namespace symbio::cli
