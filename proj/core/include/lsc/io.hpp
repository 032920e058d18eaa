#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsc/counting.hpp"
#include "lsc/grid.hpp"
#include "lsc/spectra.hpp"

namespace lsc {

// Shortest round-trip decimal formatting, deterministic across runs.
std::string format_double(double v);

struct NamedColumn {
  std::string name;
  const std::vector<double>* values = nullptr;
};

// Field CSV: "# config_hash=..." comment, then header
// x1[,x2[,x3]],<name>... with one row per node in node order.
void write_field_csv(const std::string& path, const Grid& grid,
                     const std::vector<NamedColumn>& columns, const std::string& config_hash);

// Compact binary field: int32 dimension, int32 nodes_per_side,
// float64 half_width, then float64 values in node order (little-endian).
void write_field_binary(const std::string& path, const ScalarField& field);
ScalarField read_field_binary(const std::string& path, double margin_fraction = 0.0);

// CSV header: mu,volume,N,n,boxes_total.
void write_count_csv(const std::string& path, const std::vector<CountRow>& rows,
                     const std::string& config_hash);

// CSV header: mu,count,retries.
void write_sweep_csv(const std::string& path, const std::vector<InertiaResult>& rows,
                     const std::string& config_hash);

void write_json_file(const std::string& path, const nlohmann::json& j);

// Static single-curve line plot (multiple series share the x axis).
struct SvgSeries {
  std::string label;
  const std::vector<double>* ys = nullptr;
};

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<double>& xs, const std::vector<SvgSeries>& series,
                    const std::string& config_hash, bool log_x = false, bool log_y = false);

} // namespace lsc
