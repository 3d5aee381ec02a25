#pragma once

#include "tna/ingest.hpp"
#include "tna/synth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tna {

std::uint64_t fnv1a64(std::string_view text);

// "HH:MM-HH:MM[,HH:MM-HH:MM...]" -> session intervals. Throws on bad syntax.
std::vector<SessionInterval> parse_sessions(std::string_view text);
std::string format_sessions(const std::vector<SessionInterval>& sessions);

// Flat "key = value" configuration, '#' comments, later keys win.
struct KeyValueConfig {
    std::vector<std::pair<std::string, std::string>> entries;

    static KeyValueConfig parse(std::string_view text);        // throws on malformed lines
    static KeyValueConfig load(const std::string& path);
    std::optional<std::string> get(std::string_view key) const;
};

// The full set of knobs the CLI exposes; serializable so every run can echo
// its effective configuration for provenance.
struct RunConfig {
    // windowing
    std::string sessions = "09:30-11:30,13:00-15:00";
    int window_minutes = 5;
    // analysis
    bool overnight_carry = true;
    std::string return_reference = "prev_close";  // prev_close | window_first
    int threads = 1;
    int ljung_box_lags = 20;
    int adf_lag_order = -1;  // -1 = automatic
    double significance_level = 0.05;
    // generator
    std::string preset;  // generate requires one, via flag or config file
    std::uint64_t seed = 1;
    int days = 25;
    int traders = 0;                  // 0 = preset default
    double base_rate_per_min = 0.0;   // 0 = preset default
    double price_start = 0.0;         // 0 = preset default
    std::string start_date;           // empty = preset default

    // Applies keys from a config file; unknown keys throw std::runtime_error.
    void apply(const KeyValueConfig& kv);
    // Canonical serialization; identical configs hash identically.
    std::string to_text() const;
    std::string hash_hex() const;

    WindowSpec window_spec() const;                 // throws on invalid sessions
    ScenarioConfig scenario() const;                // preset + overrides; throws on unknown preset
};

}  // namespace tna
