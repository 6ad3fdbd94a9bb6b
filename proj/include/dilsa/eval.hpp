#pragma once

#include "dilsa/datasets.hpp"
#include "dilsa/estimators.hpp"
#include "dilsa/predictor.hpp"
#include "dilsa/survival.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dilsa {

struct MatchResult {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    // (alarm index, label index) for each true positive.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Overlap matching of alarm periods against labeled event periods,
// per cell, both half-open. Each label is claimed by at most one alarm
// (earliest issued wins); surplus overlapping alarms count as false
// positives.
MatchResult match_events(const std::vector<Alarm>& alarms,
                         const std::vector<EventLabel>& labels);

// Mean |predicted start - true start| over matched pairs, in minutes.
// Absent when nothing matched.
std::optional<double> time_error_minutes(
    const MatchResult& match, const std::vector<Alarm>& alarms,
    const std::vector<EventLabel>& labels, int timestep_minutes);

struct DemandErrors {
    std::vector<double> mae;  // per horizon step
    std::vector<double> mape; // per horizon step, zero-actual terms excluded
    std::vector<double> rmse; // per horizon step
    double mae_all = 0.0;
    double mape_all = 0.0;
    double rmse_all = 0.0;
    std::uint64_t mape_excluded = 0; // terms dropped for zero actuals
    std::uint64_t instances = 0;
};

// Aligned per-instance vectors of predicted and actual counts.
DemandErrors demand_errors(const std::vector<std::vector<double>>& predicted,
                           const std::vector<std::vector<double>>& actual);

struct EvalReport {
    std::uint64_t alarms = 0;
    std::uint64_t labels = 0;
    std::uint64_t tp = 0, fp = 0, fn = 0;
    double precision = 0.0, recall = 0.0, f1 = 0.0;
    std::optional<double> time_error_min;
    DemandErrors demand;          // forecasts of matched alarms
    DemandErrors baseline_demand; // expected counts over the same windows
    std::uint64_t demand_instances_skipped = 0; // matched alarms without
                                                // forecasts or actuals
};

// Scores consolidated alarms against labels. Demand metrics compare
// each matched alarm's forecast with the actual counts over its target
// period, alongside the per-slot baseline forecast for the same period.
EvalReport evaluate(const std::vector<Alarm>& alarms,
                    const std::vector<EventLabel>& labels,
                    const CountCube& cube);

std::string report_table(const EvalReport& report);
void save_report_csv(const EvalReport& report, const std::string& path,
                     const std::string& config_hash);

// Per-output-step root-mean-square error of an estimator replayed over
// a dataset (state reset at sequence boundaries).
std::vector<double> per_step_rmse(Estimator& est, const SequenceDataset& data);

} // namespace dilsa
