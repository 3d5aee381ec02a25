#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tna {

// Milliseconds since 1970-01-01 00:00:00, exchange wall clock (no time zone).
using TimestampMs = std::int64_t;

constexpr std::int64_t kMillisPerSecond = 1000;
constexpr std::int64_t kMillisPerMinute = 60 * kMillisPerSecond;
constexpr std::int64_t kMillisPerHour = 60 * kMillisPerMinute;
constexpr std::int64_t kMillisPerDay = 24 * kMillisPerHour;

struct CivilDate {
    int year = 1970;
    int month = 1;
    int day = 1;
};

// Proleptic Gregorian day count, 1970-01-01 == day 0.
std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t z);

bool valid_civil(const CivilDate& d);

// "YYYY-MM-DD"
std::optional<CivilDate> parse_date(std::string_view s);

// "HH:MM" or "HH:MM:SS" -> milliseconds since midnight
std::optional<std::int64_t> parse_clock_ms(std::string_view s);

// ISO-8601 "YYYY-MM-DD[T ]HH:MM:SS[.fff]" or plain integer epoch milliseconds.
// Second-resolution input widens to milliseconds.
std::optional<TimestampMs> parse_timestamp(std::string_view s);

std::string format_date(std::int64_t epoch_day);
std::string format_clock(std::int64_t ms_of_day);
// "YYYY-MM-DDTHH:MM:SS.mmm"
std::string format_timestamp(TimestampMs t);

inline std::int64_t epoch_day_of(TimestampMs t) {
    return (t >= 0) ? t / kMillisPerDay : (t - kMillisPerDay + 1) / kMillisPerDay;
}

inline std::int64_t ms_of_day(TimestampMs t) {
    return t - epoch_day_of(t) * kMillisPerDay;
}

}  // namespace tna
