#pragma once

#include "dilsa/grid.hpp"
#include "dilsa/survival.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dilsa {

// Synthetic city: Poisson trip counts per cell and timestep with a
// gentle diurnal shape, plus planted dispersal events on venue cells.
// Most events are preceded by a drop-off surge `lag` steps earlier,
// which is the signal the anomaly estimator can learn to anticipate.
struct SynthConfig {
    int rows = 20;
    int cols = 20;
    int days = 60;
    int timestep_minutes = 30;
    std::string start_date = "2015-01-01";
    double base_rate = 5.0;        // mean pickups (and drops) per cell-step
    double diurnal_amplitude = 0.3;
    int events = 40;
    double magnitude = 8.0;        // surge rate multiplier
    int lag = 4;                   // steps between drop surge and event
    int precursor_len = 2;         // drop surge duration
    double precursor_fraction = 0.75;
    int duration_min = 3;
    int duration_max = 5;
    int min_separation = 40;       // same-cell event spacing, steps
    int margin_lo = 48;            // earliest event start
    int margin_hi = 24;            // steps kept clear before the end
    int venues = 60;               // cells carrying elevated venue counts
    int poi_categories = 8;
    std::uint64_t seed = 42;
    // Closed-open timestep intervals no event footprint (drop surge
    // through event end) may intersect; callers guard split boundaries.
    std::vector<std::pair<std::int64_t, std::int64_t>> forbidden;

    std::vector<std::string> validate() const;
    void require_valid() const;

    std::int64_t num_steps() const {
        return static_cast<std::int64_t>(days) *
               (1440 / timestep_minutes);
    }

    // Grid over a fixed synthetic bounding box.
    GridConfig grid_config() const;
};

struct SynthResult {
    GridConfig grid;
    std::vector<EventLabel> truth; // planted periods, sorted by cell, start
    std::uint64_t trip_rows = 0;
    std::uint64_t planted_pickups = 0; // pickups inside planted periods
};

// Writes trip, weather and POI CSVs to the given paths and returns the
// planted ground truth. Each trip row carries exactly one in-grid
// endpoint (the other is out of bounds), so cube counts equal the drawn
// Poisson values exactly. Same config and seed give byte-identical
// files.
SynthResult generate(const SynthConfig& cfg, const std::string& trips_path,
                     const std::string& weather_path,
                     const std::string& poi_path);

} // namespace dilsa
