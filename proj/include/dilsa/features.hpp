#pragma once

#include "dilsa/grid.hpp"
#include "dilsa/survival.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dilsa {

// Feature-block toggles used by the ablation protocol: recent patch
// (R), daily sums (D), POI vector (P). Disabled blocks are dropped
// from the layout entirely.
struct FeatureFlags {
    bool recent = true;
    bool daily = true;
    bool poi = true;
};

struct FeatureParams {
    int tau = 10;    // recent window length, timesteps
    int lambda = 4;  // patch radius, cells
    FeatureFlags flags;

    int patch_cells() const { return (2 * lambda + 1) * (2 * lambda + 1); }

    std::vector<std::string> validate() const;
    void require_valid() const;
};

struct TimeProfile {
    int day_of_year = 1; // 1..366
    int day_of_week = 0; // 0 = Sunday
    int tod = 0;         // timesteps since day start
};

TimeProfile time_profile(const GridConfig& config, std::int64_t t_c);

// Counts and baselines summed from the day start up to (excluding) t_c.
struct DailyProfile {
    double pickup_count_sum = 0.0;
    double pickup_base_sum = 0.0;
    double drop_count_sum = 0.0;
    double drop_base_sum = 0.0;
};

DailyProfile daily_profile(const CountCube& cube, int cell, std::int64_t t_c);

// Expected pickups over the target period (t_c, t_c + W].
std::vector<double> target_profile(const CountCube& cube, int cell,
                                   std::int64_t t_c, int horizon);

// Per-step pickup likelihood-ratio scores over (t_c, t_c + W].
std::vector<double> anomaly_profile_target(const CountCube& cube, int cell,
                                           std::int64_t t_c, int horizon,
                                           double baseline_floor);

// Per-step pickup likelihood-ratio scores over (t_c - tau, t_c].
std::vector<double> anomaly_profile_recent(const CountCube& cube, int cell,
                                           std::int64_t t_c, int tau,
                                           double baseline_floor);

// Interleaved pickup/drop counts for each timestep in [t_c - tau, t_c]
// across the (2*lambda+1)^2 patch centered on `cell`, row-major over
// patch cells, time-ascending within a cell. Off-grid cells contribute
// zeros.
std::vector<double> recent_patch(const CountCube& cube, int cell,
                                 std::int64_t t_c, int tau, int lambda);

// Named block layout of an assembled vector, persisted as a JSON
// sidecar next to each dataset so columns stay identifiable.
struct FeatureLayout {
    struct Block {
        std::string name;
        int offset = 0;
        int length = 0;
    };
    std::vector<Block> blocks;
    int total = 0;

    static FeatureLayout survival_input(int horizon, int poi_categories,
                                        const FeatureParams& params);
    static FeatureLayout anomaly_input(int horizon, int poi_categories,
                                       const FeatureParams& params);

    std::string to_json() const;
    static FeatureLayout from_json(const std::string& text);
};

// Input vector for the survival and demand estimators: time, weather,
// daily sums, target profile, target-period anomaly profile, POI
// vector, recent patch, then the current survival value. The anomaly
// profile is supplied by the caller (true values during training,
// predicted ones at inference). Returns nothing when the recent window
// reaches before the cube.
std::optional<std::vector<double>> build_xs(
    const CountCube& cube, const WeatherTable& weather, const PoiTable& poi,
    int cell, std::int64_t t_c, int horizon, const FeatureParams& params,
    const std::vector<double>& anomaly_target, double s_now);

// Input vector for the anomaly estimator: same blocks with the recent
// anomaly profile instead of the target one and no survival slot.
std::optional<std::vector<double>> build_xa(const CountCube& cube,
                                            const WeatherTable& weather,
                                            const PoiTable& poi, int cell,
                                            std::int64_t t_c, int horizon,
                                            const FeatureParams& params,
                                            double baseline_floor);

std::vector<double> build_ys(const SurvivalCurve& curve);

// Raw pickup counts over (t_c, t_c + W].
std::vector<double> build_ye(const CountCube& cube, int cell, std::int64_t t_c,
                             int horizon);

// Per-feature min-max scaling fitted on training data and reused
// verbatim on test data. Degenerate features map to 0.
struct Standardizer {
    std::vector<double> mins;
    std::vector<double> maxs;

    void reset(std::size_t width);
    void accumulate(const std::vector<double>& v);
    void accumulate(const float* v, std::size_t n);
    double transform_one(std::size_t j, double v) const;
    double inverse_one(std::size_t j, double v) const;
    void transform(const float* in, double* out, std::size_t n) const;
    void transform(std::vector<double>& v) const;
    std::size_t width() const { return mins.size(); }
};

} // namespace dilsa
