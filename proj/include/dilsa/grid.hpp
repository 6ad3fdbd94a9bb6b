#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dilsa {

// Spatial grid over a lat/lon bounding box plus a uniform time axis.
// Timesteps count from `epoch_seconds`, which must fall on midnight so
// that time-of-day slots line up with calendar days.
struct GridConfig {
    double lat_min = 0.0;
    double lat_max = 1.0;
    double lon_min = 0.0;
    double lon_max = 1.0;
    int rows = 1;
    int cols = 1;
    double cell_size_m = 0.0; // informational only
    int timestep_minutes = 30;
    int day_start_offset = 0; // timesteps after midnight where a "day" begins
    std::int64_t epoch_seconds = 0;
    std::int64_t num_steps = 0;

    int cells() const { return rows * cols; }
    int steps_per_day() const { return 1440 / timestep_minutes; }

    // Returns every violated invariant, empty when valid.
    std::vector<std::string> validate() const;

    // Throws std::runtime_error listing all violations.
    void require_valid() const;

    std::int64_t time_index(std::int64_t seconds) const;
    int time_of_day_slot(std::int64_t t) const;
    std::int64_t day_index(std::int64_t t) const;

    // First timestep of the day containing t, honoring day_start_offset.
    std::int64_t day_start(std::int64_t t) const;

    double cell_center_lat(int cell) const;
    double cell_center_lon(int cell) const;
};

struct TripRecord {
    std::int64_t pickup_time = 0; // seconds
    double pickup_lat = 0.0;
    double pickup_lon = 0.0;
    std::int64_t drop_time = 0;
    double drop_lat = 0.0;
    double drop_lon = 0.0;
};

struct CellTime {
    int cell = -1;
    std::int64_t t = -1;
};

struct MappedTrip {
    std::optional<CellTime> source; // empty = out of bounds (space or time)
    std::optional<CellTime> dest;
};

MappedTrip map_to_grid(const TripRecord& record, const GridConfig& config);

struct IngestStats {
    std::uint64_t records = 0;
    std::uint64_t pickups_counted = 0;
    std::uint64_t drops_counted = 0;
    std::uint64_t pickups_skipped = 0;
    std::uint64_t drops_skipped = 0;
};

// Per-cell, per-timestep pickup/drop counts with per-slot baselines.
// Counts are laid out cell-major: counts[cell * num_steps + t].
// Baselines are cell-major over time-of-day slots.
struct CountCube {
    GridConfig config;
    std::vector<std::uint32_t> pickup_counts;
    std::vector<std::uint32_t> drop_counts;
    std::vector<double> pickup_baseline;
    std::vector<double> drop_baseline;
    bool baselines_filled = false;
    IngestStats stats;

    std::uint32_t pickups(int cell, std::int64_t t) const {
        return pickup_counts[static_cast<std::size_t>(cell) *
                                 static_cast<std::size_t>(config.num_steps) +
                             static_cast<std::size_t>(t)];
    }
    std::uint32_t drops(int cell, std::int64_t t) const {
        return drop_counts[static_cast<std::size_t>(cell) *
                               static_cast<std::size_t>(config.num_steps) +
                           static_cast<std::size_t>(t)];
    }
    double pickup_base(int cell, std::int64_t t) const {
        return pickup_baseline[static_cast<std::size_t>(cell) *
                                   static_cast<std::size_t>(
                                       config.steps_per_day()) +
                               static_cast<std::size_t>(
                                   config.time_of_day_slot(t))];
    }
    double drop_base(int cell, std::int64_t t) const {
        return drop_baseline[static_cast<std::size_t>(cell) *
                                 static_cast<std::size_t>(
                                     config.steps_per_day()) +
                             static_cast<std::size_t>(
                                 config.time_of_day_slot(t))];
    }
};

CountCube build_count_cube(const std::vector<TripRecord>& records,
                           const GridConfig& config);

// Streams a trip CSV straight into a cube without materializing records.
// Malformed rows raise with "<path>:<line>" context.
CountCube ingest_trip_csv(const std::string& path, const GridConfig& config);

// Fills baselines as the mean count per time-of-day slot across the
// given days (day indices relative to the epoch). Days not fully
// covered by the cube raise an error naming the date.
void compute_baselines(CountCube& cube, const std::vector<std::int64_t>& training_days);

struct WeatherValues {
    double avg_wind = 0.0;
    double rain = 0.0;
    double snow = 0.0;
    double temp_max = 0.0;
    double temp_min = 0.0;
};

struct WeatherStation {
    std::string id;
    double lat = 0.0;
    double lon = 0.0;
};

struct WeatherTable {
    std::vector<WeatherStation> stations;
    // observations[day][station index in `stations`]; missing entries
    // are absent from the inner vector.
    struct Observation {
        std::size_t station = 0;
        WeatherValues values;
    };
    // keyed by absolute day number (days since 1970-01-01)
    std::vector<std::pair<std::int64_t, std::vector<Observation>>> days;

    const std::vector<Observation>* find_day(std::int64_t day) const;
};

WeatherTable load_weather_csv(const std::string& path);

// Inverse-distance interpolation of station observations to a cell
// center. A station exactly at the cell center wins outright.
WeatherValues weather_profile(int cell, std::int64_t day,
                              const WeatherTable& weather,
                              const GridConfig& config);

struct PoiTable {
    int categories = 0;
    // values[cell * categories + k]; cells absent from the CSV are zero
    std::vector<double> values;

    double at(int cell, int k) const {
        return values[static_cast<std::size_t>(cell) *
                          static_cast<std::size_t>(categories) +
                      static_cast<std::size_t>(k)];
    }
};

PoiTable load_poi_csv(const std::string& path, const GridConfig& config);

void save_cube(const CountCube& cube, const std::string& path,
               const std::string& config_hash);
CountCube load_cube(const std::string& path, const std::string& expected_hash);

} // namespace dilsa
