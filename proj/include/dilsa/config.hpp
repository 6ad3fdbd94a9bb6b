#pragma once

#include "dilsa/estimators.hpp"
#include "dilsa/features.hpp"
#include "dilsa/grid.hpp"
#include "dilsa/predictor.hpp"
#include "dilsa/survival.hpp"
#include "dilsa/synth.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dilsa {

// Everything the pipeline commands need, read from one sectioned
// key = value file. Artifacts derived from a config embed hash(); any
// command loading an artifact whose hash disagrees refuses it.
struct PipelineConfig {
    // [paths]
    std::string trips_path;
    std::string weather_path;
    std::string poi_path;
    std::string truth_path; // optional; synthetic ground truth
    std::string output_dir = "out";

    // [grid]
    GridConfig grid;
    std::string start_date = "2015-01-01";
    int days = 60;

    // [events]
    EventWindowConfig events;

    // [features]
    FeatureParams features;

    // [train]
    TrainConfig train; // epochs field unused; per-model counts below
    int epochs_fa = 20;
    int epochs_fs = 20;
    int epochs_fe = 40;
    std::vector<int> hidden = {32};
    std::string estimator_kind = "recurrent"; // recurrent | mlp | logistic
    bool fs_bce = false;

    // [predictor]
    PredictorConfig predictor;
    int warm_steps = 64;

    // [split]
    int train_days = 40;
    int tune_days = 5;
    int test_days = 15;

    // [synth]
    SynthConfig synth; // grid-shaped fields mirrored from [grid]
    bool guard_boundaries = true;

    std::uint64_t seed = 42;

    static PipelineConfig load(const std::string& path);

    std::vector<std::string> validate() const;
    void require_valid() const;

    // Stable digest of every semantic setting; paths stay out so moving
    // files around does not orphan artifacts.
    std::string hash() const;

    std::string artifact(const std::string& name) const;

    std::int64_t steps_per_day() const { return grid.steps_per_day(); }
    std::int64_t train_begin() const { return 0; }
    std::int64_t train_end() const { return train_days * steps_per_day(); }
    std::int64_t tune_begin() const { return train_end(); }
    std::int64_t tune_end() const {
        return tune_begin() + tune_days * steps_per_day();
    }
    std::int64_t test_begin() const { return tune_end(); }
    std::int64_t test_end() const {
        return test_begin() + test_days * steps_per_day();
    }

    TrainConfig train_config(int epochs, std::uint64_t seed_offset,
                             bool bce) const;
};

} // namespace dilsa
