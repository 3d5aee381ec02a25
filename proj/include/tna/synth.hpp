#pragma once

#include "tna/ingest.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tna {

struct DominanceConfig {
    double probability = 0.0;  // per-window chance of a dominating buyer
    double intensity = 0.0;    // fraction of the window's trades routed to that buyer
    double drift = 0.0;        // upward log-price push per dominated trade
};

struct ActivityConfig {
    double amplitude = 0.0;  // per-window rate multiplier exp(amplitude * sin(2*pi*w/period))
    int period_windows = 48;
    // Scales the per-window dominance probability by multiplier^-link: quiet
    // windows are the ones run by a dominating trader, busy windows are not.
    double dominance_link = 0.0;
};

struct MotifConfig {
    double rate = 0.0;              // per-window chance of a two-node multi-arc burst
    double bridge_fraction = 0.35;  // trades placed on the hub-hub parallel arcs
    double hub_fraction = 0.40;     // trades with exactly one hub endpoint
    double volatility_boost = 3.0;  // price-noise multiplier inside motif windows
};

struct SizeDistribution {
    std::int64_t minimum = 100;  // shares
    double alpha = 1.5;          // Pareto tail exponent
    std::int64_t cap = 100000;
    // One size draw shared by the whole window. A trade's size enters both of
    // its endpoints' strengths, so per-trade size variation alone correlates
    // volume with strength assortativity; a null scenario needs this off.
    bool per_window_constant = false;
};

struct ScenarioConfig {
    std::uint64_t seed = 1;
    int days = 25;
    std::string start_date = "2005-08-22";  // consecutive calendar days follow
    int trader_pool = 100;
    double base_rate_per_min = 10.0;
    double price_start = 4.60;
    double noise_sigma = 0.0015;  // per-trade log-price step
    int price_decimals = 2;       // prices quantized to 10^-price_decimals
    bool fixed_count = false;     // deterministic per-window trade counts (null calibration)
    double wash_rate = 0.0;       // chance a trade is self-matched (off by default)
    DominanceConfig dominance;
    ActivityConfig activity;
    MotifConfig motif;
    SizeDistribution sizes;
    WindowSpec window_spec = WindowSpec::standard();

    void validate() const;  // throws std::invalid_argument
};

// Per-window generation diagnostics, day-major order, one slot per window.
struct GenerationStats {
    std::vector<std::uint8_t> dominated;
    std::vector<std::uint8_t> motif;
};

// Deterministic synthetic order flow: a pure function of the config. Output
// is timestamp-ordered within each day, days concatenated in order; each day
// is generated from its own derived sub-seed and starts afresh at
// price_start, so days are independent. Per-trade drift is centred so that
// dominance pressure does not trend the price across a day.
std::vector<Transaction> generate(const ScenarioConfig& config,
                                  GenerationStats* stats = nullptr);

struct ScenarioPreset {
    std::string name;
    std::string summary;
    ScenarioConfig config;
};

// Named presets: "baseline", "dominating-buyer", "activity-waves",
// "motif-bursts". Names are stable across releases.
const std::vector<ScenarioPreset>& scenario_presets();
const ScenarioPreset* find_preset(const std::string& name);

}  // namespace tna
