#pragma once

#include "dilsa/estimators.hpp"
#include "dilsa/features.hpp"
#include "dilsa/survival.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dilsa {

struct PredictorConfig {
    double gamma = 2.95;      // hazard threshold
    double sigma = 0.1;       // survival threshold for the DIL baseline
    double hazard_eps = 1e-6; // clamp for the hazard denominator

    std::vector<std::string> validate() const;
    void require_valid() const;
};

enum class PredictionStatus { ok, no_history };

// One issued prediction for (cell, t_c) over the target period
// (t_c, t_c + W]. flags[j] refers to step t_c + 1 + j and forms a
// suffix-ones pattern. demand holds -1 sentinels unless an event was
// flagged and a demand estimator was supplied.
struct EventPrediction {
    int cell = -1;
    std::int64_t issued_at = -1;
    bool event = false;
    std::int64_t predicted_start = -1;
    std::vector<int> flags;
    std::vector<double> demand;
    std::vector<double> hazard_trace;
    SurvivalCurve curve; // monotonized predicted survival
    double s_next = 1.0; // rolling survival estimate for the next step
    PredictionStatus status = PredictionStatus::ok;
    bool cold_demand = false; // demand warm-up lacked history
};

// A prediction reduced to its claim: the period [start, end) at a cell.
// end is one past the last flagged step (issued_at + W + 1).
struct Alarm {
    int cell = -1;
    std::int64_t issued_at = -1;
    std::int64_t start = -1;
    std::int64_t end = -1;
    std::vector<double> demand;
};

// First scan position i in [1, W-1] whose hazard reaches gamma, 0 when
// none does. hz[j] is the hazard at position j + 1.
int hazard_fire_position(const std::vector<double>& hz, double gamma);

// DIL firing rule over the same scan range: first i with S(i) < sigma.
int survival_fire_position(const SurvivalCurve& curve, double sigma);

// Survival-threshold baseline: event flags over (t_c, t_g] from direct
// thresholding of the curve.
std::vector<int> predict_dil(const SurvivalCurve& curve, double sigma);

// True when at least one of the cell's baseline slots clears the floor;
// cells that never do are excluded from prediction.
bool cell_eligible(const CountCube& cube, int cell, double baseline_floor);

struct WarmupResult {
    int replayed = 0;
    bool cold = false; // history ran out; state reset instead
};

// Rebuilds f_e's recurrent state by replaying demand inputs for
// timesteps [t_e - W, t_c). Replayed anomaly slots use observed
// per-step scores up to t_c and the supplied predicted profile beyond;
// survival slots are 1 (the event has not started during the replay).
WarmupResult warmup_fe(Estimator& f_e, const CountCube& cube,
                       const WeatherTable& weather, const PoiTable& poi,
                       int cell, std::int64_t t_c, std::int64_t t_e,
                       const EventWindowConfig& ewcfg,
                       const FeatureParams& params,
                       const std::vector<double>& predicted_anomaly);

// One step of the two-stage predictor at (cell, t_c): predict the
// anomaly profile, predict and monotonize the survival curve, scan the
// hazard (or the curve directly when dil is set), and on a hit warm up
// f_e and forecast demand. Advances f_a and f_s state by one step;
// s_now is the rolling survival estimate fed into the survival slot.
EventPrediction predict_cell(Estimator& f_a, Estimator& f_s, Estimator* f_e,
                             const CountCube& cube,
                             const WeatherTable& weather, const PoiTable& poi,
                             int cell, std::int64_t t_c,
                             const EventWindowConfig& ewcfg,
                             const FeatureParams& params,
                             const PredictorConfig& pcfg, double s_now,
                             bool dil = false);

struct PredictStats {
    std::uint64_t cells_total = 0;
    std::uint64_t cells_skipped = 0;
    std::uint64_t steps_evaluated = 0;
    std::uint64_t steps_no_history = 0;
    std::uint64_t events_flagged = 0;
    std::uint64_t cold_warmups = 0;
};

struct PredictOptions {
    std::int64_t t_begin = 0;
    std::int64_t t_end = 0;
    int warm_steps = 64; // state warm-in before the first issued step
    bool dil = false;
};

// Streams every eligible cell over [t_begin, t_end), resetting
// estimator state per cell, and returns the predictions that flagged an
// event.
std::vector<EventPrediction> predict_range(
    Estimator& f_a, Estimator& f_s, Estimator* f_e, const CountCube& cube,
    const WeatherTable& weather, const PoiTable& poi,
    const EventWindowConfig& ewcfg, const FeatureParams& params,
    const PredictorConfig& pcfg, const PredictOptions& options,
    PredictStats* stats = nullptr);

// Merges overlapping per-cell predictions into one alarm per episode.
// The earliest-issued prediction supplies the start and the demand
// forecast; later overlapping ones only extend the period.
std::vector<Alarm> consolidate(const std::vector<EventPrediction>& preds);

void save_predictions_csv(const std::vector<EventPrediction>& preds,
                          const GridConfig& config, int horizon,
                          const std::string& path,
                          const std::string& config_hash);
std::vector<EventPrediction> load_predictions_csv(const std::string& path,
                                                  const GridConfig& config);

// Survival and hazard traces of flagged predictions, one row per curve
// position, for plotting.
void save_curves_csv(const std::vector<EventPrediction>& preds,
                     const GridConfig& config, const std::string& path,
                     const std::string& config_hash);

struct TuneCandidate {
    double value = 0.0;
    std::uint64_t tp = 0, fp = 0, fn = 0;
    double precision = 0.0, recall = 0.0, f1 = 0.0;
    double time_error_minutes = 0.0; // meaningful only when tp > 0
};

struct TuneResult {
    double best = 0.0;
    TuneCandidate best_row;
    std::vector<TuneCandidate> table;
};

// Scores every candidate threshold over a labeled range and returns the
// one maximizing F1 (ties: smaller time error, then smaller threshold).
// Curves are computed once; candidates reuse them. When dil is set the
// candidates are survival thresholds, otherwise hazard thresholds.
TuneResult tune_threshold(Estimator& f_a, Estimator& f_s,
                          const CountCube& cube, const WeatherTable& weather,
                          const PoiTable& poi,
                          const EventWindowConfig& ewcfg,
                          const FeatureParams& params,
                          const PredictorConfig& pcfg,
                          const std::vector<EventLabel>& labels,
                          std::int64_t t_begin, std::int64_t t_end,
                          const std::vector<double>& candidates, bool dil);

} // namespace dilsa
