#pragma once

#include "dilsa/anomaly.hpp"
#include "dilsa/grid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dilsa {

// Scan geometry for event detection: tested sub-periods run e_min to
// e_max timesteps; the labeled/predicted horizon spans `horizon` steps
// past the current time.
struct EventWindowConfig {
    int e_min = 1;
    int e_max = 10;
    int horizon = 10; // W = t_g - t_c
    double alpha = 0.001;
    double baseline_floor = kBaselineFloor;

    std::vector<std::string> validate() const;
    void require_valid() const;
};

// Survival probabilities over the target period: values[j] = S(t_c+1+j)
// for j in [0, W). The anchor S(t_c) = 1 is implicit. Ground-truth
// curves are step functions; predicted curves may take any values in
// [0, 1].
struct SurvivalCurve {
    std::vector<double> values;

    bool all_ones() const;

    // 1-based offset i of the first zero entry (event at t_c + i), or 0
    // when the curve has no zero.
    int first_zero_position() const;
};

struct EventLabel {
    int cell = -1;
    std::int64_t t_e = -1;       // event start
    std::int64_t t_end = -1;     // exclusive end of the detected period
};

// First significant sub-period found by the scan, in scan priority
// order (longest window first, then earliest start).
struct Detection {
    std::int64_t t0 = -1;
    std::int64_t t1 = -1; // exclusive
};

// Survival labeling scan over [t_c - e_max, t_g]: windows of length k
// (k = e_max down to e_min) starting at ascending t_0 are aggregated
// and tested; the first significant window ending past t_c zeroes the
// curve from max(t_0, t_c) onward.
SurvivalCurve get_st(const CountCube& cube, int cell, std::int64_t t_c,
                     const EventWindowConfig& cfg,
                     Detection* detection = nullptr);

// Running-minimum pass anchored at S(0) = 1; predicted curves are not
// guaranteed monotone but the hazard definition requires it.
void monotonize(SurvivalCurve& curve);

// H(t) = (S(t-1) - S(t)) / max(S(t), eps) over the curve positions,
// computed after monotonization.
std::vector<double> hazard(const SurvivalCurve& curve, double eps = 1e-6);

// Scans every cell over cursor times [t_begin, t_end) and merges the
// detected windows into one label per distinct anomalous period.
// Merged periods may exceed e_max when consecutive detections chain.
std::vector<EventLabel> label_events(const CountCube& cube,
                                     const EventWindowConfig& cfg,
                                     std::int64_t t_begin, std::int64_t t_end);

void save_labels_csv(const std::vector<EventLabel>& labels,
                     const GridConfig& config, const std::string& path,
                     const std::string& config_hash);
std::vector<EventLabel> load_labels_csv(const std::string& path,
                                        const GridConfig& config);

} // namespace dilsa
