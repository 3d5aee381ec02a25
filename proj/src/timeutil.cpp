#include "tna/timeutil.hpp"

#include <charconv>
#include <cstdio>

namespace tna {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

std::optional<int> parse_int_field(std::string_view s) {
    if (!all_digits(s)) return std::nullopt;
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::int64_t days_from_civil(const CivilDate& d) {
    // Howard Hinnant's civil-days algorithm.
    std::int64_t y = d.year;
    const int m = d.month;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d.day) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

bool valid_civil(const CivilDate& d) {
    if (d.month < 1 || d.month > 12) return false;
    if (d.day < 1) return false;
    static constexpr int days_in_month[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dim = days_in_month[d.month - 1];
    const bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
    if (d.month == 2 && leap) dim = 29;
    return d.day <= dim;
}

std::optional<CivilDate> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto y = parse_int_field(s.substr(0, 4));
    auto m = parse_int_field(s.substr(5, 2));
    auto d = parse_int_field(s.substr(8, 2));
    if (!y || !m || !d) return std::nullopt;
    CivilDate cd{*y, *m, *d};
    if (!valid_civil(cd)) return std::nullopt;
    return cd;
}

std::optional<std::int64_t> parse_clock_ms(std::string_view s) {
    if (s.size() != 5 && s.size() != 8) return std::nullopt;
    if (s[2] != ':') return std::nullopt;
    auto h = parse_int_field(s.substr(0, 2));
    auto mi = parse_int_field(s.substr(3, 2));
    if (!h || !mi || *h > 23 || *mi > 59) return std::nullopt;
    std::int64_t sec = 0;
    if (s.size() == 8) {
        if (s[5] != ':') return std::nullopt;
        auto se = parse_int_field(s.substr(6, 2));
        if (!se || *se > 59) return std::nullopt;
        sec = *se;
    }
    return (*h * kMillisPerHour) + (*mi * kMillisPerMinute) + sec * kMillisPerSecond;
}

std::optional<TimestampMs> parse_timestamp(std::string_view s) {
    if (s.empty()) return std::nullopt;

    // Integer epoch milliseconds.
    {
        std::string_view body = s;
        if (body[0] == '-') body.remove_prefix(1);
        if (all_digits(body)) {
            std::int64_t v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
            return v;
        }
    }

    // ISO-8601 date + time.
    if (s.size() < 19) return std::nullopt;
    auto date = parse_date(s.substr(0, 10));
    if (!date) return std::nullopt;
    if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
    auto clock = parse_clock_ms(s.substr(11, 8));
    if (!clock) return std::nullopt;

    std::int64_t millis = 0;
    if (s.size() > 19) {
        if (s[19] != '.' || s.size() == 20) return std::nullopt;
        std::string_view frac = s.substr(20);
        if (frac.size() > 9 || !all_digits(frac)) return std::nullopt;
        // Truncate sub-millisecond digits.
        for (std::size_t i = 0; i < 3; ++i) {
            millis = millis * 10 + (i < frac.size() ? frac[i] - '0' : 0);
        }
    }
    return days_from_civil(*date) * kMillisPerDay + *clock + millis;
}

std::string format_date(std::int64_t epoch_day) {
    const CivilDate d = civil_from_days(epoch_day);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::string format_clock(std::int64_t ms) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d",
                  static_cast<int>(ms / kMillisPerHour),
                  static_cast<int>((ms / kMillisPerMinute) % 60),
                  static_cast<int>((ms / kMillisPerSecond) % 60));
    return buf;
}

std::string format_timestamp(TimestampMs t) {
    const std::int64_t day = epoch_day_of(t);
    const std::int64_t ms = t - day * kMillisPerDay;
    const CivilDate d = civil_from_days(day);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03d",
                  d.year, d.month, d.day,
                  static_cast<int>(ms / kMillisPerHour),
                  static_cast<int>((ms / kMillisPerMinute) % 60),
                  static_cast<int>((ms / kMillisPerSecond) % 60),
                  static_cast<int>(ms % 1000));
    return buf;
}

}  // namespace tna
