#include "lsc/config.hpp"

#include <cmath>
#include <fstream>

namespace lsc {

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

std::vector<double> get_vec(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<double>>();
}

} // namespace

RunConfig RunConfig::from_json(const json& j) {
  RunConfig cfg;
  if (j.contains("potential")) {
    const json& p = j.at("potential");
    if (p.is_string()) {
      cfg.potential_builtin = p.get<std::string>();
    } else if (p.is_array()) {
      cfg.potential_builtin.clear();
      std::vector<std::pair<std::vector<int>, double>> terms;
      for (const json& t : p)
        terms.emplace_back(t.at("alpha").get<std::vector<int>>(), t.at("coeff").get<double>());
      cfg.potential_literal = std::move(terms);
    } else {
      throw ConfigError("config: 'potential' must be a builtin name or a term array");
    }
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    cfg.grid.dimension = get_or(g, "dimension", cfg.grid.dimension);
    cfg.grid.half_width = get_or(g, "half_width", cfg.grid.half_width);
    cfg.grid.nodes_per_side = get_or(g, "nodes_per_side", cfg.grid.nodes_per_side);
    cfg.grid.margin_fraction = get_or(g, "margin_fraction", cfg.grid.margin_fraction);
  }
  if (j.contains("mu_grid")) {
    const json& m = j.at("mu_grid");
    cfg.mu_grid.mode = get_or<std::string>(m, "mode", cfg.mu_grid.mode);
    cfg.mu_grid.min = get_or(m, "min", cfg.mu_grid.min);
    cfg.mu_grid.max = get_or(m, "max", cfg.mu_grid.max);
    cfg.mu_grid.count = get_or(m, "count", cfg.mu_grid.count);
    cfg.mu_grid.scale = get_or<std::string>(m, "scale", cfg.mu_grid.scale);
  }
  if (j.contains("samples")) {
    const json& s = j.at("samples");
    cfg.samples.m_samples = get_or(s, "m_samples", cfg.samples.m_samples);
    cfg.samples.m_box_half_width = get_or(s, "m_box_half_width", cfg.samples.m_box_half_width);
    cfg.samples.harnack_samples = get_or(s, "harnack_samples", cfg.samples.harnack_samples);
    cfg.samples.condition_centers = get_or(s, "condition_centers", cfg.samples.condition_centers);
    cfg.samples.condition_radii = get_or(s, "condition_radii", cfg.samples.condition_radii);
    cfg.samples.condition_r_min = get_or(s, "condition_r_min", cfg.samples.condition_r_min);
    cfg.samples.condition_r_max = get_or(s, "condition_r_max", cfg.samples.condition_r_max);
    cfg.samples.kato_delta = get_or(s, "kato_delta", cfg.samples.kato_delta);
  }
  cfg.anchor = get_vec(j, "anchor");
  cfg.indicator_radii = get_vec(j, "indicator_radii");
  cfg.shells = get_vec(j, "shells");
  cfg.l1_boxes = get_vec(j, "l1_boxes");
  cfg.refine = get_or(j, "refine", cfg.refine);
  cfg.count_field = get_or<std::string>(j, "count_field", cfg.count_field);
  cfg.validate();
  return cfg;
}

json RunConfig::to_json() const {
  json j;
  if (potential_literal) {
    json terms = json::array();
    for (const auto& [alpha, coeff] : *potential_literal)
      terms.push_back({{"alpha", alpha}, {"coeff", coeff}});
    j["potential"] = terms;
  } else {
    j["potential"] = potential_builtin;
  }
  j["grid"] = {{"dimension", grid.dimension},
               {"half_width", grid.half_width},
               {"nodes_per_side", grid.nodes_per_side},
               {"margin_fraction", grid.margin_fraction}};
  j["mu_grid"] = {{"mode", mu_grid.mode},
                  {"min", mu_grid.min},
                  {"max", mu_grid.max},
                  {"count", mu_grid.count},
                  {"scale", mu_grid.scale}};
  j["samples"] = {{"m_samples", samples.m_samples},
                  {"m_box_half_width", samples.m_box_half_width},
                  {"harnack_samples", samples.harnack_samples},
                  {"condition_centers", samples.condition_centers},
                  {"condition_radii", samples.condition_radii},
                  {"condition_r_min", samples.condition_r_min},
                  {"condition_r_max", samples.condition_r_max},
                  {"kato_delta", samples.kato_delta}};
  j["anchor"] = anchor;
  j["indicator_radii"] = indicator_radii;
  j["shells"] = shells;
  j["l1_boxes"] = l1_boxes;
  j["refine"] = refine;
  j["count_field"] = count_field;
  return j;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string RunConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(to_json().dump())));
  return buf;
}

void RunConfig::validate() const {
  if (potential_builtin.empty() && !potential_literal)
    throw ConfigError("config: a potential is required");
  if (potential_literal) {
    if (potential_literal->empty()) throw ConfigError("config: empty polynomial literal");
    for (const auto& [alpha, coeff] : *potential_literal) {
      if (static_cast<int>(alpha.size()) != grid.dimension)
        throw ConfigError("config: polynomial term dimension does not match grid");
      for (int e : alpha)
        if (e < 0) throw ConfigError("config: negative exponent in polynomial literal");
      (void)coeff;
    }
  }
  if (mu_grid.mode != "decade_above_ground" && mu_grid.mode != "explicit")
    throw ConfigError("config: mu_grid.mode must be 'decade_above_ground' or 'explicit'");
  if (mu_grid.scale != "log" && mu_grid.scale != "linear")
    throw ConfigError("config: mu_grid.scale must be 'log' or 'linear'");
  if (mu_grid.count < 1) throw ConfigError("config: mu_grid.count must be >= 1");
  if (mu_grid.mode == "explicit") {
    if (!(mu_grid.min > 0.0) || !(mu_grid.max >= mu_grid.min))
      throw ConfigError("config: explicit mu_grid requires 0 < min <= max");
  }
  if (!anchor.empty() && static_cast<int>(anchor.size()) != grid.dimension)
    throw ConfigError("config: anchor dimension does not match grid");
  if (count_field != "effective" && count_field != "potential")
    throw ConfigError("config: count_field must be 'effective' or 'potential'");
  // Grid ranges are validated by make_grid; run it for the side effect.
  make_grid();
}

Grid RunConfig::make_grid() const {
  return Grid(grid.dimension, grid.half_width, grid.nodes_per_side, grid.margin_fraction);
}

Grid RunConfig::make_refined_grid() const {
  // One refinement step: d = 1 halves h and doubles the box (n -> 4n+3);
  // d >= 2 halves h with the box fixed (n -> 2n+1). Box adequacy in d >= 2
  // is covered by the domain-adequacy flag.
  if (grid.dimension == 1)
    return Grid(1, 2.0 * grid.half_width, 4 * grid.nodes_per_side + 3,
                grid.margin_fraction * 0.5);
  return Grid(grid.dimension, grid.half_width, 2 * grid.nodes_per_side + 1,
              grid.margin_fraction);
}

Potential RunConfig::make_potential() const {
  if (potential_literal) {
    Polynomial p(grid.dimension);
    for (const auto& [alpha, coeff] : *potential_literal) {
      MultiIndex mi = MultiIndex::zero(grid.dimension);
      for (int a = 0; a < grid.dimension; ++a) mi.e[a] = alpha[a];
      if (coeff != 0.0) p.set_term(mi, p.terms().count(mi) ? p.terms().at(mi) + coeff : coeff);
    }
    return PolynomialPotential(std::move(p), grid.half_width);
  }
  return make_builtin_potential(potential_builtin, grid.dimension, grid.half_width);
}

std::vector<double> RunConfig::make_mu_grid(double ground_state) const {
  double lo = mu_grid.min, hi = mu_grid.max;
  if (mu_grid.mode == "decade_above_ground") {
    if (!(ground_state > 0.0))
      throw NumericError("mu grid: nonpositive ground-state estimate");
    lo = ground_state;
    hi = 10.0 * ground_state;
  }
  const int n = mu_grid.count;
  std::vector<double> mus(n);
  if (n == 1) {
    mus[0] = lo;
    return mus;
  }
  if (mu_grid.scale == "log") {
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) mus[i] = lo * std::exp(step * i);
  } else {
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) mus[i] = lo + step * i;
  }
  return mus;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config parse error in '" + path + "': " + e.what());
  }
  return RunConfig::from_json(j);
}

} // namespace lsc
