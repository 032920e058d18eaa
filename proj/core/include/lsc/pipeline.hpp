#pragma once

#include <string>

#include "lsc/config.hpp"
#include "lsc/verify.hpp"

namespace lsc {

struct PipelineOutput {
  json report;
  bool finding = false; // an inequality failed on the data (CLI exit 3)
};

// Each runner writes its artifacts under out_dir (created if missing) and
// returns the JSON report it also persisted there.
PipelineOutput run_solve(const RunConfig& cfg, const std::string& out_dir, bool svg);
PipelineOutput run_msweep(const RunConfig& cfg, const std::string& out_dir, bool svg);
PipelineOutput run_count(const RunConfig& cfg, const std::string& out_dir, bool svg);
PipelineOutput run_spectra(const RunConfig& cfg, const std::string& out_dir, bool svg);
PipelineOutput run_verify(const RunConfig& cfg, const std::string& out_dir, bool svg);
PipelineOutput run_diagnose(const RunConfig& cfg, const std::string& out_dir, bool svg);

PipelineOutput run_subcommand(const std::string& name, const RunConfig& cfg,
                              const std::string& out_dir, bool svg);

} // namespace lsc
