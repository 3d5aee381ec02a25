#include "tna/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tna {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_bool(std::string_view v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::runtime_error("config: bad boolean for " + key);
}

std::int64_t parse_i64(std::string_view v, const std::string& key) {
    std::int64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size()) {
        throw std::runtime_error("config: bad integer for " + key);
    }
    return out;
}

double parse_f64(std::string_view v, const std::string& key) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size()) {
        throw std::runtime_error("config: bad number for " + key);
    }
    return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::vector<SessionInterval> parse_sessions(std::string_view text) {
    std::vector<SessionInterval> sessions;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = trim(text.substr(pos, comma - pos));
        if (item.empty()) throw std::invalid_argument("sessions: empty interval");
        const std::size_t dash = item.find('-');
        if (dash == std::string_view::npos) throw std::invalid_argument("sessions: expected HH:MM-HH:MM");
        const auto open = parse_clock_ms(trim(item.substr(0, dash)));
        const auto close = parse_clock_ms(trim(item.substr(dash + 1)));
        if (!open || !close) throw std::invalid_argument("sessions: bad clock time");
        sessions.push_back({*open, *close});
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return sessions;
}

std::string format_sessions(const std::vector<SessionInterval>& sessions) {
    std::string out;
    for (const auto& s : sessions) {
        if (!out.empty()) out += ',';
        out += format_clock(s.open_ms).substr(0, 5);
        out += '-';
        out += format_clock(s.close_ms).substr(0, 5);
    }
    return out;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
    KeyValueConfig kv;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        const bool last = end == text.size();
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line[0] != '#') {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw std::runtime_error("config: line " + std::to_string(line_no) +
                                         " is not 'key = value'");
            }
            const std::string_view key = trim(line.substr(0, eq));
            const std::string_view value = trim(line.substr(eq + 1));
            if (key.empty()) {
                throw std::runtime_error("config: empty key on line " + std::to_string(line_no));
            }
            kv.entries.emplace_back(std::string(key), std::string(value));
        }
        if (last) break;
    }
    return kv;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(std::move(buf).str());
}

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
    std::optional<std::string> out;
    for (const auto& [k, v] : entries) {
        if (k == key) out = v;
    }
    return out;
}

void RunConfig::apply(const KeyValueConfig& kv) {
    for (const auto& [key, value] : kv.entries) {
        if (key == "sessions") sessions = value;
        else if (key == "window_minutes") window_minutes = static_cast<int>(parse_i64(value, key));
        else if (key == "overnight_carry") overnight_carry = parse_bool(value, key);
        else if (key == "return_reference") return_reference = value;
        else if (key == "threads") threads = static_cast<int>(parse_i64(value, key));
        else if (key == "ljung_box_lags") ljung_box_lags = static_cast<int>(parse_i64(value, key));
        else if (key == "adf_lag_order") adf_lag_order = value == "auto" ? -1 : static_cast<int>(parse_i64(value, key));
        else if (key == "significance_level") significance_level = parse_f64(value, key);
        else if (key == "preset") preset = value;
        else if (key == "seed") seed = static_cast<std::uint64_t>(parse_i64(value, key));
        else if (key == "days") days = static_cast<int>(parse_i64(value, key));
        else if (key == "traders") traders = static_cast<int>(parse_i64(value, key));
        else if (key == "base_rate_per_min") base_rate_per_min = parse_f64(value, key);
        else if (key == "price_start") price_start = parse_f64(value, key);
        else if (key == "start_date") start_date = value;
        else throw std::runtime_error("config: unknown key '" + key + "'");
    }
    if (return_reference != "prev_close" && return_reference != "window_first") {
        throw std::runtime_error("config: return_reference must be prev_close or window_first");
    }
}

std::string RunConfig::to_text() const {
    std::ostringstream out;
    out << "sessions = " << sessions << '\n'
        << "window_minutes = " << window_minutes << '\n'
        << "overnight_carry = " << (overnight_carry ? "true" : "false") << '\n'
        << "return_reference = " << return_reference << '\n'
        << "threads = " << threads << '\n'
        << "ljung_box_lags = " << ljung_box_lags << '\n'
        << "adf_lag_order = " << (adf_lag_order < 0 ? std::string("auto") : std::to_string(adf_lag_order)) << '\n'
        << "significance_level = " << significance_level << '\n'
        << "preset = " << preset << '\n'
        << "seed = " << seed << '\n'
        << "days = " << days << '\n'
        << "traders = " << traders << '\n'
        << "base_rate_per_min = " << base_rate_per_min << '\n'
        << "price_start = " << price_start << '\n'
        << "start_date = " << start_date << '\n';
    return out.str();
}

std::string RunConfig::hash_hex() const {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(to_text())));
    return buf;
}

WindowSpec RunConfig::window_spec() const {
    WindowSpec spec;
    spec.sessions = parse_sessions(sessions);
    spec.window_ms = static_cast<std::int64_t>(window_minutes) * kMillisPerMinute;
    spec.validate();
    return spec;
}

ScenarioConfig RunConfig::scenario() const {
    const ScenarioPreset* p = find_preset(preset);
    if (!p) throw std::runtime_error("unknown preset '" + preset + "'");
    ScenarioConfig cfg = p->config;
    cfg.seed = seed;
    cfg.days = days;
    if (traders > 0) cfg.trader_pool = traders;
    if (base_rate_per_min > 0.0) cfg.base_rate_per_min = base_rate_per_min;
    if (price_start > 0.0) cfg.price_start = price_start;
    if (!start_date.empty()) cfg.start_date = start_date;
    cfg.window_spec = window_spec();
    return cfg;
}

}  // namespace tna
