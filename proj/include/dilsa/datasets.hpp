#pragma once

#include "dilsa/features.hpp"
#include "dilsa/grid.hpp"
#include "dilsa/survival.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dilsa {

// Ordered instances for a stateful estimator. Instances are grouped
// into sequences (per grid cell, or per event block for the demand
// set); within a sequence times strictly increase and the estimator's
// internal state is reset at each sequence boundary. Values are stored
// as float32; standardization happens at training time.
struct SequenceDataset {
    int input_dim = 0;
    int output_dim = 0;
    std::vector<float> inputs;   // row-major [instances x input_dim]
    std::vector<float> outputs;  // row-major [instances x output_dim]
    std::vector<std::uint32_t> cells;
    std::vector<std::int64_t> times;
    // First instance index of each sequence, plus a final sentinel
    // equal to the instance count.
    std::vector<std::uint64_t> sequence_starts;
    FeatureLayout layout;
    std::uint64_t skipped = 0; // ineligible (cell, time) slots

    std::size_t size() const { return cells.size(); }
    const float* input_row(std::size_t i) const {
        return inputs.data() + i * static_cast<std::size_t>(input_dim);
    }
    const float* output_row(std::size_t i) const {
        return outputs.data() + i * static_cast<std::size_t>(output_dim);
    }
};

// One instance per eligible (cell, timestep) in [t_begin, t_end):
// survival-estimator inputs built with the true target-period anomaly
// profile, labels from the survival scan.
SequenceDataset build_fs_dataset(const CountCube& cube,
                                 const WeatherTable& weather,
                                 const PoiTable& poi,
                                 const EventWindowConfig& ewcfg,
                                 const FeatureParams& params,
                                 std::int64_t t_begin, std::int64_t t_end);

// Same enumeration with anomaly-estimator inputs; labels are the true
// target-period anomaly profiles.
SequenceDataset build_fa_dataset(const CountCube& cube,
                                 const WeatherTable& weather,
                                 const PoiTable& poi,
                                 const EventWindowConfig& ewcfg,
                                 const FeatureParams& params,
                                 std::int64_t t_begin, std::int64_t t_end);

// Event-only demand set: scanning each cell, when a survival curve
// first shows an event inside the target period (previous cursor's
// curve was all ones), one block of `horizon` consecutive instances is
// emitted starting at that cursor, and the scan jumps past the block.
// Each block forms its own sequence.
SequenceDataset build_fe_dataset(const CountCube& cube,
                                 const WeatherTable& weather,
                                 const PoiTable& poi,
                                 const EventWindowConfig& ewcfg,
                                 const FeatureParams& params,
                                 std::int64_t t_begin, std::int64_t t_end);

void save_dataset(const SequenceDataset& data, const std::string& path,
                  const std::string& config_hash);
SequenceDataset load_dataset(const std::string& path,
                             const std::string& expected_hash);

} // namespace dilsa
