#include "lsc/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "lsc/io.hpp"

namespace lsc {

namespace {

namespace fs = std::filesystem;

std::string prep_dir(const std::string& out_dir) {
  fs::create_directories(out_dir);
  return out_dir;
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

json grid_json(const Grid& g) {
  return {{"dimension", g.dimension()},
          {"half_width", g.half_width()},
          {"nodes_per_side", g.nodes_per_side()},
          {"margin_fraction", g.margin_fraction()},
          {"spacing", g.spacing()}};
}

json harnack_json(const HarnackReport& h) {
  return {{"c_h", h.c_h},
          {"samples_used", h.samples_used},
          {"skipped_small_boxes", h.skipped_small_boxes},
          {"clipped_boxes", h.clipped_boxes},
          {"worst_x", std::vector<double>(h.worst_x.begin(), h.worst_x.end())}};
}

json equivalence_json(const EquivalenceReport& e) {
  json j{{"kind", to_string(e.kind)},
         {"ratio_min", e.ratio_min},
         {"ratio_max", e.ratio_max},
         {"spread", e.spread},
         {"samples", e.samples},
         {"noncontiguous_m_samples", e.noncontiguous_m_samples}};
  if (e.kind == EquivalenceKind::MGrowth) {
    j["fitted_exponent"] = e.fitted_exponent;
    j["fitted_constant"] = e.fitted_constant;
  }
  return j;
}

json condition_json(const ConditionReport& c) {
  return {{"kind", c.kind == ConditionKind::Kato ? "kato" : "doubling"},
          {"constant_estimate", c.constant_estimate},
          {"delta", c.delta},
          {"samples", c.samples},
          {"worst_x", c.worst_case.x},
          {"worst_r", c.worst_case.r},
          {"worst_R", c.worst_case.R}};
}

json chain_json(const ChainCheck& c) {
  return {{"mu", c.mu},
          {"c_h", c.c_h},
          {"n_mu", c.n_mu},
          {"volume_term", c.volume_term},
          {"N_mu", c.N_mu},
          {"n_chmu", c.n_chmu},
          {"volume_term_linear_mu", c.volume_term_linear_mu},
          {"lower_ok", c.lower_ok},
          {"middle_ok", c.middle_ok},
          {"upper_ok", c.upper_ok}};
}

json sandwich_json(const SandwichReport& s) {
  json rows = json::array();
  for (const auto& r : s.rows) rows.push_back({{"mu", r.mu}, {"count", r.count}});
  return {{"dimension", s.dimension},
          {"rows", rows},
          {"lower_found", s.lower_found},
          {"upper_found", s.upper_found},
          {"c_est", s.c_est},
          {"C_est", s.C_est},
          {"domain_adequate", s.domain_adequate},
          {"adequacy_level", s.adequacy_level},
          {"c_h", s.c_h},
          {"upper_lemma_threshold", s.upper_lemma_threshold},
          {"lower_lemma_threshold", s.lower_lemma_threshold},
          {"upper_consistent_with_lemma", s.upper_consistent_with_lemma},
          {"lower_consistent_with_lemma", s.lower_consistent_with_lemma}};
}

json base_report(const RunConfig& cfg, const std::string& subcommand) {
  return {{"subcommand", subcommand},
          {"config", cfg.to_json()},
          {"config_hash", cfg.hash()},
          // The middle chain term scales the volume by mu^(d/2) (box-volume
          // accounting); the display-form mu * V(mu) is kept alongside for
          // d != 2 as volume_term_linear_mu.
          {"chain_prefactor", "mu^(d/2)"}};
}

void write_manifest(const std::string& out_dir, const RunConfig& cfg,
                    const std::vector<std::string>& files) {
  json m{{"config_hash", cfg.hash()}, {"files", files}};
  write_json_file(join(out_dir, "manifest.json"), m);
}

struct GridRunData {
  Grid grid;
  std::vector<InertiaResult> counts;
  HarnackReport harnack;
  SandwichReport sandwich;
  std::vector<ChainCheck> chains;
  std::vector<CountRow> count_rows;
  double residual = 0.0;
  bool chains_ok = true;
  std::optional<LandscapeSolution> sol;
};

GridRunData run_verify_on_grid(const RunConfig& cfg, const Grid& grid, const Potential& pot,
                               std::span<const double> mu) {
  const DiscreteOperator op = assemble(pot, grid);
  const LandscapeSolver solver(op);
  LandscapeSolution sol = solver.solve_full();
  const ScalarField effpot = effective_potential(sol);

  GridRunData data{grid, {}, {}, {}, {}, {}, sol.stats.residual_inf, true, {}};
  data.counts = count_sweep(op, mu);
  data.harnack = harnack_constant(sol, cfg.samples.harnack_samples);

  std::vector<SandwichRow> rows;
  rows.reserve(mu.size());
  for (const auto& r : data.counts) rows.push_back({r.mu, r.count});
  data.sandwich = sandwich_constants(rows, effpot, data.harnack.c_h);

  for (double m : mu) {
    data.chains.push_back(chain_check(effpot, m, data.harnack.c_h, cfg.anchor));
    data.chains_ok = data.chains_ok && data.chains.back().all_ok();
  }
  data.count_rows = count_curve(effpot, mu, cfg.anchor);
  data.sol = std::move(sol);
  return data;
}

json grid_run_json(const GridRunData& d) {
  json chains = json::array();
  for (const auto& c : d.chains) chains.push_back(chain_json(c));
  json counts = json::array();
  for (const auto& r : d.count_rows)
    counts.push_back({{"mu", r.mu},
                      {"volume", r.volume},
                      {"N", r.N},
                      {"n", r.n},
                      {"boxes_total", r.boxes_total}});
  return {{"grid", grid_json(d.grid)},
          {"residual", d.residual},
          {"harnack", harnack_json(d.harnack)},
          {"sandwich", sandwich_json(d.sandwich)},
          {"chains", chains},
          {"chains_ok", d.chains_ok},
          {"count_rows", counts}};
}

double resolved_m_box(const RunConfig& cfg) {
  return cfg.samples.m_box_half_width > 0.0 ? cfg.samples.m_box_half_width : 50.0;
}

} // namespace

PipelineOutput run_solve(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  prep_dir(out_dir);
  const Grid grid = cfg.make_grid();
  const Potential pot = cfg.make_potential();
  const DiscreteOperator op = assemble(pot, grid);
  const LandscapeSolver solver(op);

  std::vector<LandscapeSolution> sols;
  if (cfg.indicator_radii.empty()) {
    sols.push_back(solver.solve_full());
  } else {
    for (size_t i = 0; i < cfg.indicator_radii.size(); ++i) {
      if (i > 0 && !(cfg.indicator_radii[i] > cfg.indicator_radii[i - 1]))
        throw ConfigError("solve: indicator_radii must be increasing");
      sols.push_back(solver.solve_indicator(cfg.indicator_radii[i]));
    }
  }

  const std::string hash = cfg.hash();
  std::vector<std::string> files;
  json solutions = json::array();
  for (size_t i = 0; i < sols.size(); ++i) {
    const auto& sol = sols[i];
    const ScalarField w = effective_potential(sol);
    const std::string tag =
        sols.size() == 1 ? std::string("landscape")
                         : "landscape_r" + std::to_string(i);
    write_field_csv(join(out_dir, tag + ".csv"), grid,
                    {{"u", &sol.u.values}, {"inv_u", &w.values}}, hash);
    write_field_binary(join(out_dir, tag + ".bin"), sol.u);
    files.push_back(tag + ".csv");
    files.push_back(tag + ".bin");
    solutions.push_back({{"rhs", sol.rhs_kind == RhsKind::Full ? "full" : "indicator"},
                         {"indicator_radius", sol.indicator_radius},
                         {"residual", sol.stats.residual_inf},
                         {"u_min_interior", field_min(sol.u)},
                         {"u_max_interior", field_max(sol.u)},
                         {"field_csv", tag + ".csv"},
                         {"field_bin", tag + ".bin"}});
  }

  if (svg) {
    // u along the first axis through the center of the box.
    const int n = grid.nodes_per_side();
    std::vector<double> xs(n), us(n);
    std::array<int, 3> t{0, 0, 0};
    for (int a = 1; a < grid.dimension(); ++a) t[a] = n / 2;
    for (int i = 0; i < n; ++i) {
      t[0] = i;
      xs[i] = grid.coord(i);
      us[i] = sols.back().u.values[grid.pack(t)];
    }
    write_svg_plot(join(out_dir, "landscape.svg"), "landscape function along axis 1", xs,
                   {{"u", &us}}, hash);
    files.push_back("landscape.svg");
  }

  json report = base_report(cfg, "solve");
  report["grid"] = grid_json(grid);
  report["solutions"] = solutions;
  write_json_file(join(out_dir, "solve.json"), report);
  files.push_back("solve.json");
  write_manifest(out_dir, cfg, files);
  return {report, false};
}

PipelineOutput run_msweep(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  prep_dir(out_dir);
  const Potential pot = cfg.make_potential();
  const auto* poly = std::get_if<PolynomialPotential>(&pot);
  const int d = dimension(pot);
  const double box = resolved_m_box(cfg);
  const int count = cfg.samples.m_samples;
  if (count < 2) throw ConfigError("msweep: need at least two sample points");

  std::vector<double> ts(count), ms(count), Ms(count);
  std::vector<double> noncontig(count, 0.0);
  std::optional<SmithZhongEvaluator> M;
  if (poly) M.emplace(poly->poly());
  std::vector<double> x(d, 0.0);
  for (int i = 0; i < count; ++i) {
    ts[i] = -box + 2.0 * box * i / (count - 1);
    x.assign(d, 0.0);
    x[0] = ts[i];
    const auto m = maximal_m(pot, x);
    ms[i] = m.value;
    noncontig[i] = m.feasible_set_noncontiguous ? 1.0 : 0.0;
    if (M) Ms[i] = (*M)(x);
  }

  const std::string hash = cfg.hash();
  std::vector<std::string> files;
  {
    auto path = join(out_dir, "msweep.csv");
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open '" + path + "'");
    out << "# config_hash=" << hash << "\n";
    out << (poly ? "t,m,M,noncontiguous\n" : "t,m,noncontiguous\n");
    for (int i = 0; i < count; ++i) {
      out << format_double(ts[i]) << "," << format_double(ms[i]);
      if (poly) out << "," << format_double(Ms[i]);
      out << "," << (noncontig[i] != 0.0 ? 1 : 0) << "\n";
    }
    files.push_back("msweep.csv");
  }
  if (svg) {
    std::vector<SvgSeries> series{{"m", &ms}};
    if (poly) series.push_back({"M", &Ms});
    write_svg_plot(join(out_dir, "msweep.svg"), "maximal functions along axis 1", ts, series,
                   hash);
    files.push_back("msweep.svg");
  }

  json report = base_report(cfg, "msweep");
  report["profile_axis"] = 0;
  report["box_half_width"] = box;
  report["samples"] = count;
  const ConditionSampleSpec cspec = [&] {
    ConditionSampleSpec s = default_condition_samples(d, box, cfg.samples.condition_centers,
                                                      cfg.samples.condition_radii,
                                                      cfg.samples.condition_r_min,
                                                      cfg.samples.condition_r_max);
    s.delta = cfg.samples.kato_delta;
    return s;
  }();
  report["kato"] = condition_json(check_condition(pot, ConditionKind::Kato, cspec));
  report["doubling"] = condition_json(check_condition(pot, ConditionKind::Doubling, cspec));
  write_json_file(join(out_dir, "msweep.json"), report);
  files.push_back("msweep.json");
  write_manifest(out_dir, cfg, files);
  return {report, false};
}

PipelineOutput run_count(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  prep_dir(out_dir);
  const Grid grid = cfg.make_grid();
  const Potential pot = cfg.make_potential();

  ScalarField field(grid, 0.0);
  double ground = 0.0;
  if (cfg.count_field == "potential") {
    field = sample_on_grid(pot, grid);
    if (cfg.mu_grid.mode == "decade_above_ground")
      ground = smallest_eigenvalue(assemble(pot, grid));
  } else {
    const DiscreteOperator op = assemble(pot, grid);
    const LandscapeSolution sol = solve_landscape(op, RhsKind::Full);
    field = effective_potential(sol);
    if (cfg.mu_grid.mode == "decade_above_ground") ground = smallest_eigenvalue(op);
  }
  const std::vector<double> mu = cfg.make_mu_grid(ground);
  const std::vector<CountRow> rows = count_curve(field, mu, cfg.anchor);

  const std::string hash = cfg.hash();
  write_count_csv(join(out_dir, "counts.csv"), rows, hash);
  std::vector<std::string> files{"counts.csv"};
  if (svg) {
    std::vector<double> vols;
    for (const auto& r : rows) vols.push_back(r.volume);
    write_svg_plot(join(out_dir, "counts.svg"), "sublevel volume", mu, {{"volume", &vols}}, hash,
                   cfg.mu_grid.scale == "log", false);
    files.push_back("counts.svg");
  }

  json report = base_report(cfg, "count");
  report["field"] = cfg.count_field;
  report["grid"] = grid_json(grid);
  json jrows = json::array();
  for (const auto& r : rows)
    jrows.push_back({{"mu", r.mu},
                     {"volume", r.volume},
                     {"N", r.N},
                     {"n", r.n},
                     {"boxes_total", r.boxes_total}});
  report["rows"] = jrows;
  write_json_file(join(out_dir, "count.json"), report);
  files.push_back("count.json");
  write_manifest(out_dir, cfg, files);
  return {report, false};
}

PipelineOutput run_spectra(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  prep_dir(out_dir);
  const Grid grid = cfg.make_grid();
  const Potential pot = cfg.make_potential();
  const DiscreteOperator op = assemble(pot, grid);
  double ground = 0.0;
  if (cfg.mu_grid.mode == "decade_above_ground") ground = smallest_eigenvalue(op);
  const std::vector<double> mu = cfg.make_mu_grid(ground);
  const std::vector<InertiaResult> sweep = count_sweep(op, mu);

  const std::string hash = cfg.hash();
  write_sweep_csv(join(out_dir, "spectra.csv"), sweep, hash);
  std::vector<std::string> files{"spectra.csv"};
  if (svg) {
    std::vector<double> counts;
    for (const auto& r : sweep) counts.push_back(static_cast<double>(r.count));
    write_svg_plot(join(out_dir, "spectra.svg"), "eigenvalue counting function", mu,
                   {{"count", &counts}}, hash, cfg.mu_grid.scale == "log", false);
    files.push_back("spectra.svg");
  }

  json report = base_report(cfg, "spectra");
  report["grid"] = grid_json(grid);
  if (cfg.mu_grid.mode == "decade_above_ground") report["ground_state"] = ground;
  json jrows = json::array();
  for (const auto& r : sweep)
    jrows.push_back({{"mu", r.mu}, {"count", r.count}, {"retries", r.retries}});
  report["rows"] = jrows;
  write_json_file(join(out_dir, "spectra.json"), report);
  files.push_back("spectra.json");
  write_manifest(out_dir, cfg, files);
  return {report, false};
}

PipelineOutput run_verify(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  prep_dir(out_dir);
  const Grid grid = cfg.make_grid();
  const Potential pot = cfg.make_potential();
  const auto* poly = std::get_if<PolynomialPotential>(&pot);

  const double ground = smallest_eigenvalue(assemble(pot, grid));
  const std::vector<double> mu = cfg.make_mu_grid(ground);

  const GridRunData base = run_verify_on_grid(cfg, grid, pot, mu);

  json report = base_report(cfg, "verify");
  report["ground_state"] = ground;
  report["mu_grid"] = mu;
  report["base"] = grid_run_json(base);

  bool finding = !base.sandwich.lower_found || !base.sandwich.upper_found || !base.chains_ok;

  if (poly) {
    const double mbox = resolved_m_box(cfg);
    json eq;
    eq["u_vs_m"] = equivalence_json(equivalence_u_m(*base.sol, *poly, cfg.samples.m_samples));
    eq["m_vs_M"] = equivalence_json(equivalence_m_M(*poly, mbox, cfg.samples.m_samples));
    eq["m_growth"] = equivalence_json(growth_fit(*poly, mbox, std::min(cfg.samples.m_samples, 64)));
    eq["taylor_bound_constant"] = taylor_bound_constant(*poly, mbox, cfg.samples.m_samples);
    report["equivalences"] = eq;

    ConditionSampleSpec cspec = default_condition_samples(
        dimension(pot), mbox, cfg.samples.condition_centers, cfg.samples.condition_radii,
        cfg.samples.condition_r_min, cfg.samples.condition_r_max);
    cspec.delta = cfg.samples.kato_delta;
    report["conditions"] = {
        {"kato", condition_json(check_condition(pot, ConditionKind::Kato, cspec))},
        {"doubling", condition_json(check_condition(pot, ConditionKind::Doubling, cspec))}};
  }

  if (cfg.refine) {
    const Grid refined = cfg.make_refined_grid();
    const GridRunData ref = run_verify_on_grid(cfg, refined, pot, mu);
    report["refined"] = grid_run_json(ref);
    json stability;
    if (base.sandwich.lower_found && ref.sandwich.lower_found)
      stability["c_shift"] =
          std::abs(ref.sandwich.c_est - base.sandwich.c_est) / base.sandwich.c_est;
    if (base.sandwich.upper_found && ref.sandwich.upper_found)
      stability["C_shift"] =
          std::abs(ref.sandwich.C_est - base.sandwich.C_est) / base.sandwich.C_est;
    stability["harnack_shift"] =
        std::abs(ref.harnack.c_h - base.harnack.c_h) / base.harnack.c_h;
    report["stability"] = stability;
    finding = finding || !ref.sandwich.lower_found || !ref.sandwich.upper_found || !ref.chains_ok;
  }

  report["finding"] = finding;

  const std::string hash = cfg.hash();
  write_sweep_csv(join(out_dir, "verify_counts.csv"), base.counts, hash);
  write_count_csv(join(out_dir, "verify_volumes.csv"), base.count_rows, hash);
  std::vector<std::string> files{"verify_counts.csv", "verify_volumes.csv"};

  if (svg) {
    std::vector<double> counts, lower, upper;
    const int d = grid.dimension();
    for (size_t i = 0; i < mu.size(); ++i) {
      counts.push_back(static_cast<double>(base.counts[i].count));
      const auto& s = base.sandwich;
      lower.push_back(s.lower_found
                          ? std::pow(s.c_est * mu[i], 0.5 * d) * base.count_rows[i].volume
                          : 0.0);
      upper.push_back(s.upper_found
                          ? std::pow(s.C_est * mu[i], 0.5 * d) * base.count_rows[i].volume
                          : 0.0);
    }
    // The plotted bound curves reuse V(mu) rather than V(c mu): they are a
    // visual guide; the report rows carry the exact terms.
    write_svg_plot(join(out_dir, "verify.svg"), "counting function and volume bounds", mu,
                   {{"count", &counts}, {"lower", &lower}, {"upper", &upper}}, hash,
                   cfg.mu_grid.scale == "log", false);
    files.push_back("verify.svg");
  }

  write_json_file(join(out_dir, "verify.json"), report);
  files.push_back("verify.json");
  write_manifest(out_dir, cfg, files);
  return {report, finding};
}

PipelineOutput run_diagnose(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  prep_dir(out_dir);
  const Grid grid = cfg.make_grid();
  const Potential pot = cfg.make_potential();
  const auto* poly = std::get_if<PolynomialPotential>(&pot);

  const DiscreteOperator op = assemble(pot, grid);
  const LandscapeSolution sol = solve_landscape(op, RhsKind::Full);

  const double iw = grid.interior_half_width();
  std::vector<double> shells = cfg.shells;
  if (shells.empty()) shells = {0.25 * iw, 0.5 * iw, 0.75 * iw};
  std::vector<double> boxes = cfg.l1_boxes;
  if (boxes.empty()) boxes = {0.125 * iw, 0.25 * iw, 0.5 * iw, iw};

  const ShellTrend trend = diagnose_discreteness_numeric(sol, shells);
  const L1Trend l1 = l1_probe(sol, boxes);

  json report = base_report(cfg, "diagnose");
  report["grid"] = grid_json(grid);
  if (poly) {
    report["polynomial_criterion"] = {
        {"discrete", diagnose_discreteness_polynomial(*poly)},
        {"note", "no partial derivative vanishes identically"}};
  }
  report["shell_trend"] = {{"radii", trend.radii},
                           {"sups", trend.sups},
                           {"consistent_with_discrete", trend.consistent_with_discrete},
                           {"verdict", trend.verdict}};
  report["l1_probe"] = {{"box_half_widths", l1.box_half_widths},
                        {"integrals", l1.integrals},
                        {"increments", l1.increments},
                        {"integrable", l1.integrable},
                        {"verdict", l1.verdict}};

  const std::string hash = cfg.hash();
  std::vector<std::string> files;
  if (svg) {
    write_svg_plot(join(out_dir, "diagnose.svg"), "sup of u outside radius R", trend.radii,
                   {{"sup", &trend.sups}}, hash);
    files.push_back("diagnose.svg");
  }
  write_json_file(join(out_dir, "diagnose.json"), report);
  files.push_back("diagnose.json");
  write_manifest(out_dir, cfg, files);
  return {report, false};
}

PipelineOutput run_subcommand(const std::string& name, const RunConfig& cfg,
                              const std::string& out_dir, bool svg) {
  if (name == "solve") return run_solve(cfg, out_dir, svg);
  if (name == "msweep") return run_msweep(cfg, out_dir, svg);
  if (name == "count") return run_count(cfg, out_dir, svg);
  if (name == "spectra") return run_spectra(cfg, out_dir, svg);
  if (name == "verify") return run_verify(cfg, out_dir, svg);
  if (name == "diagnose") return run_diagnose(cfg, out_dir, svg);
  throw ConfigError("unknown subcommand '" + name + "'");
}

} // namespace lsc
