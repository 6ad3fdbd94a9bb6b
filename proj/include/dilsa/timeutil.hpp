#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dilsa {

// Timestamps are naive local time, stored as seconds since 1970-01-01
// 00:00:00 with no timezone applied. Dates are stored as whole days on
// the same axis.

struct CivilDate {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..31
};

std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t days);

// 0 = Sunday .. 6 = Saturday
int day_of_week(std::int64_t days);

// 1..366
int day_of_year(const CivilDate& d);

// Accepts "YYYY-MM-DD HH:MM:SS" and ISO-8601 "YYYY-MM-DDTHH:MM:SS"
// (fractional seconds ignored). Returns nothing on malformed input.
std::optional<std::int64_t> parse_timestamp(std::string_view s);

// "YYYY-MM-DD" -> day index
std::optional<std::int64_t> parse_date(std::string_view s);

std::string format_timestamp(std::int64_t seconds);
std::string format_date(std::int64_t days);

} // namespace dilsa
