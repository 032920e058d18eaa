#include "lsc/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace lsc {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Trim to the shortest representation that round-trips.
  for (int prec = 1; prec <= 16; ++prec) {
    char probe[32];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    if (std::strtod(probe, nullptr) == v) return probe;
  }
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  return out;
}

} // namespace

void write_field_csv(const std::string& path, const Grid& grid,
                     const std::vector<NamedColumn>& columns, const std::string& config_hash) {
  auto out = open_out(path);
  out << "# config_hash=" << config_hash << "\n";
  const int d = grid.dimension();
  for (int a = 0; a < d; ++a) out << "x" << (a + 1) << ",";
  for (size_t c = 0; c < columns.size(); ++c)
    out << columns[c].name << (c + 1 < columns.size() ? "," : "\n");
  std::array<double, 3> p{};
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    grid.node_point(i, std::span<double>(p.data(), d));
    for (int a = 0; a < d; ++a) out << format_double(p[a]) << ",";
    for (size_t c = 0; c < columns.size(); ++c)
      out << format_double((*columns[c].values)[i]) << (c + 1 < columns.size() ? "," : "\n");
  }
}

void write_field_binary(const std::string& path, const ScalarField& field) {
  auto out = open_out(path, true);
  const std::int32_t dim = field.grid.dimension();
  const std::int32_t n = field.grid.nodes_per_side();
  const double hw = field.grid.half_width();
  out.write(reinterpret_cast<const char*>(&dim), sizeof dim);
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&hw), sizeof hw);
  out.write(reinterpret_cast<const char*>(field.values.data()),
            sizeof(double) * field.values.size());
}

ScalarField read_field_binary(const std::string& path, double margin_fraction) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open field file '" + path + "'");
  std::int32_t dim = 0, n = 0;
  double hw = 0.0;
  in.read(reinterpret_cast<char*>(&dim), sizeof dim);
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&hw), sizeof hw);
  if (!in) throw ConfigError("truncated field file '" + path + "'");
  Grid grid(dim, hw, n, margin_fraction);
  std::vector<double> values(static_cast<size_t>(grid.node_count()));
  in.read(reinterpret_cast<char*>(values.data()), sizeof(double) * values.size());
  if (!in) throw ConfigError("truncated field file '" + path + "'");
  return ScalarField(grid, std::move(values));
}

void write_count_csv(const std::string& path, const std::vector<CountRow>& rows,
                     const std::string& config_hash) {
  auto out = open_out(path);
  out << "# config_hash=" << config_hash << "\n";
  out << "mu,volume,N,n,boxes_total\n";
  for (const auto& r : rows)
    out << format_double(r.mu) << "," << format_double(r.volume) << "," << r.N << "," << r.n
        << "," << r.boxes_total << "\n";
}

void write_sweep_csv(const std::string& path, const std::vector<InertiaResult>& rows,
                     const std::string& config_hash) {
  auto out = open_out(path);
  out << "# config_hash=" << config_hash << "\n";
  out << "mu,count,retries\n";
  for (const auto& r : rows)
    out << format_double(r.mu) << "," << r.count << "," << r.retries << "\n";
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<double>& xs, const std::vector<SvgSeries>& series,
                    const std::string& config_hash, bool log_x, bool log_y) {
  if (xs.empty() || series.empty()) throw ConfigError("svg plot: empty data");
  const int width = 720, height = 480, margin = 56;

  auto tx = [&](double v) { return log_x ? std::log10(std::max(v, 1e-300)) : v; };
  auto ty = [&](double v) { return log_y ? std::log10(std::max(v, 1e-300)) : v; };

  double xmin = tx(xs.front()), xmax = xmin, ymin = 0, ymax = 0;
  bool first = true;
  for (double v : xs) {
    xmin = std::min(xmin, tx(v));
    xmax = std::max(xmax, tx(v));
  }
  for (const auto& s : series)
    for (double v : *s.ys) {
      const double t = ty(v);
      if (first) {
        ymin = ymax = t;
        first = false;
      }
      ymin = std::min(ymin, t);
      ymax = std::max(ymax, t);
    }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  auto px = [&](double v) {
    return margin + (tx(v) - xmin) / (xmax - xmin) * (width - 2 * margin);
  };
  auto py = [&](double v) {
    return height - margin - (ty(v) - ymin) / (ymax - ymin) * (height - 2 * margin);
  };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  auto out = open_out(path);
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "<!-- config_hash=" << config_hash << " -->\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">%s</text>\n",
                margin, title.c_str());
  out << buf;
  // Axes.
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", margin,
                height - margin, width - margin, height - margin);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", margin,
                margin, margin, height - margin);
  out << buf;
  // Corner tick labels.
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\">%.4g%s</text>\n",
                margin, height - margin + 16, log_x ? std::pow(10.0, xmin) : xmin,
                log_x ? " (log)" : "");
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\">%.4g</text>\n",
                width - margin - 40, height - margin + 16, log_x ? std::pow(10.0, xmax) : xmax);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"4\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\">%.4g%s</text>\n",
                height - margin, log_y ? std::pow(10.0, ymin) : ymin, log_y ? " (log)" : "");
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"4\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\">%.4g</text>\n",
                margin + 4, log_y ? std::pow(10.0, ymax) : ymax);
  out << buf;

  for (size_t s = 0; s < series.size(); ++s) {
    out << "<polyline fill=\"none\" stroke=\"" << palette[s % 5] << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size() && i < series[s].ys->size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.6g,%.6g ", px(xs[i]), py((*series[s].ys)[i]));
      out << buf;
    }
    out << "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%d\" y=\"%zu\" font-family=\"sans-serif\" font-size=\"12\" "
                  "fill=\"%s\">%s</text>\n",
                  width - margin - 140, 40 + 16 * s, palette[s % 5], series[s].label.c_str());
    out << buf;
  }
  out << "</svg>\n";
}

} // namespace lsc
