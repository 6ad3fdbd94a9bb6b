#pragma once

#include "dilsa/grid.hpp"

#include <cstdint>
#include <vector>

namespace dilsa {

// Likelihood-ratio score of an observed count against its expected
// baseline under a Poisson model. Zero whenever the count does not
// exceed the baseline.
double llr(double count, double baseline);

// P(X <= k) for X ~ Poisson(lambda), stable for lambda up to ~1e4.
double poisson_cdf(std::int64_t k, double lambda);

// True when the upper tail P(X > count) is at most alpha and the count
// actually exceeds the baseline.
bool is_significant(std::int64_t count, double baseline, double alpha);

// Cells whose aggregated baseline falls below this floor are treated
// as too sparse to test; scoring substitutes the floor instead.
constexpr double kBaselineFloor = 1.0;

struct RegionScore {
    double llr = 0.0;
    bool significant = false;
    double count = 0.0;
    double baseline = 0.0;
    bool eligible = true; // false when the baseline floor kicked in
};

// Aggregates pickup counts and baselines over [t_begin, t_end) at one
// cell and scores the total.
RegionScore score_region(const CountCube& cube, int cell, std::int64_t t_begin,
                         std::int64_t t_end, double alpha,
                         double baseline_floor = kBaselineFloor);

// Per-cell LLR of counts aggregated over [t_begin, t_end), for heatmap
// export. Baselines below the floor are raised to it.
std::vector<double> llr_map(const CountCube& cube, std::int64_t t_begin,
                            std::int64_t t_end,
                            double baseline_floor = kBaselineFloor);

void save_llr_map_csv(const std::vector<double>& values,
                      const GridConfig& config, const std::string& path,
                      const std::string& config_hash);

// Single-step LLR of pickups at (cell, t) with the floored baseline;
// the building block of anomaly profiles.
double step_llr(const CountCube& cube, int cell, std::int64_t t,
                double baseline_floor = kBaselineFloor);

// Same for drops.
double step_llr_drop(const CountCube& cube, int cell, std::int64_t t,
                     double baseline_floor = kBaselineFloor);

} // namespace dilsa
