#pragma once

#include "dilsa/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dilsa {

// One function per CLI command. Each loads what it needs from the
// configured paths, verifies embedded config hashes, writes its
// outputs under output_dir and prints a short summary to stdout.
// Failures raise std::runtime_error naming the culprit.

// Generates the synthetic corpus at the configured input paths and
// writes the planted ground truth to truth_path.
void run_synth(const PipelineConfig& cfg);

// Streams the trip CSV into a count cube (baselines not yet filled).
void run_ingest(const PipelineConfig& cfg);

// Fills per-slot baselines from the training days and rewrites the
// cube.
void run_baseline(const PipelineConfig& cfg);

// Aggregated per-cell anomaly scores over [t0, t1) for heatmap export;
// the range defaults to the test period.
void run_score(const PipelineConfig& cfg, std::optional<std::int64_t> t0,
               std::optional<std::int64_t> t1);

// Survival-scan event labels over [t0, t1), defaulting to the whole
// cube.
void run_label(const PipelineConfig& cfg, std::optional<std::int64_t> t0,
               std::optional<std::int64_t> t1);

// Builds the three training datasets over the training period.
void run_build_datasets(const PipelineConfig& cfg);

// Trains the requested estimators ("fa", "fs", "fe"; empty trains all
// three) and writes model files and per-epoch loss curves.
void run_train(const PipelineConfig& cfg,
               const std::vector<std::string>& only);

// Sweeps firing thresholds over the tuning period and persists the
// best one (hazard gamma, or survival sigma when dil is set).
void run_tune(const PipelineConfig& cfg, bool dil,
              std::vector<double> candidates);

// Streams the two-stage predictor over the test period and writes the
// flagged predictions and their curves. An explicit threshold beats the
// tuned file, which beats the config value.
void run_predict(const PipelineConfig& cfg, bool dil,
                 std::optional<double> gamma, std::optional<double> sigma);

// Consolidates stored predictions into alarms, matches them against
// test-period labels and reports detection and demand metrics.
// scan_labels forces survival-scan labels even when ground truth is
// configured.
void run_evaluate(const PipelineConfig& cfg, std::string predictions_path,
                  bool dil, bool scan_labels);

// Retrains the survival and demand estimators under reduced feature
// sets and reports their teacher-forced per-step RMSE on the test
// period. Combos are letter sets drawn from R (recent patch), D (daily
// sums) and P (POI counts), or "none".
void run_ablate(const PipelineConfig& cfg, std::vector<std::string> combos);

} // namespace dilsa
