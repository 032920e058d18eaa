#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsc/grid.hpp"
#include "lsc/potential.hpp"

namespace lsc {

using json = nlohmann::json;

struct GridSpecCfg {
  int dimension = 1;
  double half_width = 10.0;
  int nodes_per_side = 255;
  double margin_fraction = 0.1;
};

struct MuGridSpec {
  std::string mode = "decade_above_ground"; // or "explicit"
  double min = 0.0;                         // explicit mode
  double max = 0.0;
  int count = 20;
  std::string scale = "log"; // "log" or "linear"
};

struct SampleSpecCfg {
  int m_samples = 200;
  double m_box_half_width = 0.0; // 0: use the interior half-width
  int harnack_samples = 256;
  int condition_centers = 10;
  int condition_radii = 6;
  double condition_r_min = 0.1;
  double condition_r_max = 100.0;
  double kato_delta = 2.0; // polynomial default
};

// One JSON document drives every subcommand; no environment configuration.
struct RunConfig {
  std::string potential_builtin = "harmonic"; // empty when a literal is given
  std::optional<std::vector<std::pair<std::vector<int>, double>>> potential_literal;
  GridSpecCfg grid;
  MuGridSpec mu_grid;
  SampleSpecCfg samples;
  std::vector<double> anchor;          // counting anchor; empty = origin
  std::vector<double> indicator_radii; // solve: empty = full rhs
  std::vector<double> shells;          // diagnose: empty = interior * {1/4, 1/2, 3/4}
  std::vector<double> l1_boxes;        // diagnose: empty = interior * {1/8, 1/4, 1/2, 1}
  bool refine = false;                 // verify: one refinement step + stability
  std::string count_field = "effective"; // count: "effective" or "potential"

  static RunConfig from_json(const json& j);
  json to_json() const;
  std::string hash() const; // FNV-1a over the canonical serialization

  void validate() const;
  Grid make_grid() const;
  Grid make_refined_grid() const;
  Potential make_potential() const;
  std::vector<double> make_mu_grid(double ground_state) const;
};

RunConfig load_config_file(const std::string& path);

std::uint64_t fnv1a64(std::string_view s);

} // namespace lsc
