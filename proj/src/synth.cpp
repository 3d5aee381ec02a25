#include "tna/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tna {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t day_seed(std::uint64_t seed, int day) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(day) + 1));
}

std::string trader_id(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "A%04d", index);
    return buf;
}

}  // namespace

void ScenarioConfig::validate() const {
    const auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (days < 1) throw std::invalid_argument("scenario: days must be >= 1");
    if (trader_pool < 2) throw std::invalid_argument("scenario: trader pool must be >= 2");
    if (base_rate_per_min < 0.0) throw std::invalid_argument("scenario: negative base rate");
    if (price_start <= 0.0) throw std::invalid_argument("scenario: price_start must be positive");
    if (noise_sigma < 0.0) throw std::invalid_argument("scenario: negative noise sigma");
    if (price_decimals < 0 || price_decimals > 6) {
        throw std::invalid_argument("scenario: price_decimals out of range");
    }
    if (!in_unit(wash_rate)) throw std::invalid_argument("scenario: wash_rate out of range");
    if (!in_unit(dominance.probability) || !in_unit(dominance.intensity)) {
        throw std::invalid_argument("scenario: dominance parameters out of range");
    }
    if (dominance.drift < 0.0) throw std::invalid_argument("scenario: negative dominance drift");
    if (activity.amplitude < 0.0) throw std::invalid_argument("scenario: negative activity amplitude");
    if (activity.period_windows < 1) throw std::invalid_argument("scenario: activity period must be >= 1");
    if (activity.dominance_link < 0.0) throw std::invalid_argument("scenario: negative dominance link");
    if (!in_unit(motif.rate) || !in_unit(motif.bridge_fraction) || !in_unit(motif.hub_fraction)) {
        throw std::invalid_argument("scenario: motif parameters out of range");
    }
    if (motif.bridge_fraction + motif.hub_fraction > 1.0) {
        throw std::invalid_argument("scenario: motif fractions exceed 1");
    }
    if (motif.volatility_boost < 1.0) {
        throw std::invalid_argument("scenario: motif volatility boost must be >= 1");
    }
    if (sizes.minimum < 1 || sizes.cap < sizes.minimum) {
        throw std::invalid_argument("scenario: invalid size distribution bounds");
    }
    if (sizes.alpha <= 0.0) throw std::invalid_argument("scenario: size alpha must be positive");
    if (!parse_date(start_date)) throw std::invalid_argument("scenario: bad start_date");
    window_spec.validate();
}

std::vector<Transaction> generate(const ScenarioConfig& cfg, GenerationStats* stats) {
    cfg.validate();
    if (stats) {
        stats->dominated.clear();
        stats->motif.clear();
    }

    const std::int64_t start_day = days_from_civil(*parse_date(cfg.start_date));
    const double window_minutes =
        static_cast<double>(cfg.window_spec.window_ms) / static_cast<double>(kMillisPerMinute);
    const int per_day = cfg.window_spec.windows_per_day();
    const double ticks = std::pow(10.0, cfg.price_decimals);
    // Unconditional expected drift per trade, subtracted from every step.
    const double drift_comp =
        cfg.dominance.probability * cfg.dominance.intensity * cfg.dominance.drift;

    // Window start offsets within a day.
    std::vector<std::int64_t> window_start;
    window_start.reserve(static_cast<std::size_t>(per_day));
    for (const auto& s : cfg.window_spec.sessions) {
        for (std::int64_t t = s.open_ms; t < s.close_ms; t += cfg.window_spec.window_ms) {
            window_start.push_back(t);
        }
    }

    std::vector<Transaction> out;
    out.reserve(static_cast<std::size_t>(
        cfg.base_rate_per_min * window_minutes * per_day * cfg.days * 1.1) + 64);

    for (int day = 0; day < cfg.days; ++day) {
        std::mt19937_64 rng(day_seed(cfg.seed, day));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_int_distribution<int> pick_trader(0, cfg.trader_pool - 1);

        const std::int64_t day_ms = (start_day + day) * kMillisPerDay;
        double log_price = std::log(cfg.price_start);
        std::size_t seq = 0;

        for (int w = 0; w < per_day; ++w) {
            const double mult =
                cfg.activity.amplitude > 0.0
                    ? std::exp(cfg.activity.amplitude *
                               std::sin(2.0 * std::numbers::pi * static_cast<double>(w) /
                                        static_cast<double>(cfg.activity.period_windows)))
                    : 1.0;
            const double lambda = cfg.base_rate_per_min * window_minutes * mult;
            int count = 0;
            if (cfg.fixed_count) {
                count = static_cast<int>(std::llround(lambda));
            } else {
                std::poisson_distribution<int> poisson(lambda);
                count = poisson(rng);
            }

            double dominance_p = cfg.dominance.probability;
            if (cfg.activity.dominance_link > 0.0) {
                dominance_p = std::min(1.0, dominance_p *
                                                std::pow(mult, -cfg.activity.dominance_link));
            }
            const bool dominated = unit(rng) < dominance_p;
            const int dominant_buyer = dominated ? pick_trader(rng) : 0;
            const bool motif = !dominated && unit(rng) < cfg.motif.rate;
            int hub_buyer = 0, hub_seller = 0;
            if (motif) {
                hub_buyer = pick_trader(rng);
                do {
                    hub_seller = pick_trader(rng);
                } while (hub_seller == hub_buyer);
            }
            if (stats) {
                stats->dominated.push_back(dominated ? 1 : 0);
                stats->motif.push_back(motif ? 1 : 0);
            }

            if (count <= 0) continue;

            const std::int64_t w_start = day_ms + window_start[static_cast<std::size_t>(w)];
            std::uniform_int_distribution<std::int64_t> stamp(0, cfg.window_spec.window_ms - 1);
            std::vector<std::int64_t> times(static_cast<std::size_t>(count));
            for (auto& t : times) t = w_start + stamp(rng);
            std::sort(times.begin(), times.end());

            const double sigma = cfg.noise_sigma * (motif ? cfg.motif.volatility_boost : 1.0);
            const auto draw_size = [&]() {
                const double u = unit(rng);
                const std::int64_t s = static_cast<std::int64_t>(
                    static_cast<double>(cfg.sizes.minimum) *
                    std::pow(std::max(u, 1e-12), -1.0 / cfg.sizes.alpha));
                return std::clamp(s, cfg.sizes.minimum, cfg.sizes.cap);
            };
            const std::int64_t window_size = cfg.sizes.per_window_constant ? draw_size() : 0;
            for (int i = 0; i < count; ++i) {
                int buyer = 0, seller = 0;
                bool dominated_trade = false;
                const double role = unit(rng);
                if (dominated && role < cfg.dominance.intensity) {
                    buyer = dominant_buyer;
                    seller = pick_trader(rng);
                    dominated_trade = true;
                } else if (motif && role < cfg.motif.bridge_fraction) {
                    buyer = hub_buyer;
                    seller = hub_seller;
                } else if (motif && role < cfg.motif.bridge_fraction + cfg.motif.hub_fraction) {
                    if (unit(rng) < 0.5) {
                        buyer = hub_buyer;
                        seller = pick_trader(rng);
                    } else {
                        seller = hub_seller;
                        buyer = pick_trader(rng);
                    }
                } else {
                    buyer = pick_trader(rng);
                    seller = pick_trader(rng);
                }

                const bool wash = cfg.wash_rate > 0.0 && unit(rng) < cfg.wash_rate;
                if (wash) {
                    seller = buyer;
                } else {
                    while (seller == buyer) seller = pick_trader(rng);
                }

                log_price += sigma * gauss(rng) - drift_comp +
                             (dominated_trade ? cfg.dominance.drift : 0.0);
                const std::int64_t tick_count =
                    std::max<std::int64_t>(1, std::llround(std::exp(log_price) * ticks));
                const double price = static_cast<double>(tick_count) / ticks;

                const std::int64_t size = cfg.sizes.per_window_constant ? window_size : draw_size();

                Transaction t;
                char id[24];
                std::snprintf(id, sizeof(id), "T%03d%06zu", day, seq++);
                t.txn_id = id;
                t.buyer_id = trader_id(buyer);
                t.seller_id = trader_id(seller);
                t.timestamp = times[static_cast<std::size_t>(i)];
                t.price = price;
                t.size = size;
                t.side = dominated_trade ? 'B' : (unit(rng) < 0.5 ? 'B' : 'S');
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

const std::vector<ScenarioPreset>& scenario_presets() {
    static const std::vector<ScenarioPreset> presets = [] {
        std::vector<ScenarioPreset> p;

        {
            ScenarioPreset preset;
            preset.name = "baseline";
            preset.summary = "no structure: fixed per-window trade counts, random pairing";
            preset.config.trader_pool = 100;
            preset.config.fixed_count = true;
            preset.config.sizes = {100, 1.5, 100000, true};
            p.push_back(std::move(preset));
        }
        {
            ScenarioPreset preset;
            preset.name = "dominating-buyer";
            preset.summary = "windows with a single absorbing buyer and upward price pressure";
            preset.config.trader_pool = 80;
            preset.config.dominance = {0.35, 0.75, 0.0005};
            p.push_back(std::move(preset));
        }
        {
            ScenarioPreset preset;
            preset.name = "activity-waves";
            preset.summary = "intraday trade-rate modulation; quiet windows dominated";
            preset.config.trader_pool = 100;
            preset.config.activity = {1.1, 48, 1.2};
            preset.config.dominance = {0.30, 0.70, 0.0};
            p.push_back(std::move(preset));
        }
        {
            ScenarioPreset preset;
            preset.name = "motif-bursts";
            preset.summary = "two-node multiple-arc bursts between hubs with elevated volatility";
            preset.config.trader_pool = 60;
            preset.config.motif = {0.30, 0.35, 0.40, 3.0};
            p.push_back(std::move(preset));
        }
        return p;
    }();
    return presets;
}

const ScenarioPreset* find_preset(const std::string& name) {
    for (const auto& p : scenario_presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace tna
