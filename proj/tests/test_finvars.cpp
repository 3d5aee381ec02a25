#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tna/finvars.hpp"

#include <cmath>
#include <random>

using namespace tna;

namespace {

struct Tick {
    std::int64_t ms;
    double price;
    std::int64_t size;
};

Window window_of(const std::vector<Tick>& ticks) {
    Window w;
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        Transaction t;
        t.txn_id = "T" + std::to_string(i);
        t.buyer_id = "B";
        t.seller_id = "S";
        t.timestamp = ticks[i].ms;
        t.price = ticks[i].price;
        t.size = ticks[i].size;
        w.transactions.push_back(std::move(t));
    }
    return w;
}

}  // namespace

TEST_CASE("window return") {
    const Window w = window_of({{0, 4.00, 100}, {1000, 4.0802, 100}});
    CHECK(*window_return(w, 4.00) == doctest::Approx(std::log(4.0802 / 4.00)).epsilon(1e-12));
    CHECK(*window_return(w, 4.0802) == doctest::Approx(0.0));

    const Window flat = window_of({{0, 4.00, 100}});
    CHECK(*window_return(flat, 4.00) == doctest::Approx(0.0));

    CHECK_FALSE(window_return(w, std::nullopt).has_value());
    CHECK_FALSE(window_return(window_of({}), 4.00).has_value());
}

TEST_CASE("returns telescope across windows") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> step(-0.01, 0.01);
    std::uniform_int_distribution<int> count(0, 5);

    double log_price = std::log(4.60);
    std::vector<Window> windows;
    for (int i = 0; i < 200; ++i) {
        std::vector<Tick> ticks;
        const int c = count(rng);  // zero-trade windows interleave
        for (int j = 0; j < c; ++j) {
            log_price += step(rng);
            ticks.push_back({static_cast<std::int64_t>(i) * 300000 + j * 1000,
                             std::exp(log_price), 100});
        }
        windows.push_back(window_of(ticks));
    }

    std::optional<double> reference;
    double sum = 0.0;
    std::optional<double> first_price, last_price;
    for (const auto& w : windows) {
        const auto r = window_return(w, reference);
        if (r) sum += *r;
        if (!w.transactions.empty()) {
            if (!first_price) first_price = w.transactions.back().price;
            last_price = w.transactions.back().price;
            reference = w.transactions.back().price;
        }
    }
    REQUIRE(first_price.has_value());
    CHECK(sum == doctest::Approx(std::log(*last_price / *first_price)).epsilon(1e-9));
}

TEST_CASE("window volatility") {
    CHECK(*window_volatility(window_of({{0, 4.37, 100}})) == doctest::Approx(0.0));
    CHECK(*window_volatility(window_of({{0, 4.00, 100}, {1000, 4.20, 100}})) ==
          doctest::Approx(std::log(4.20) - std::log(4.00)).epsilon(1e-12));
    CHECK_FALSE(window_volatility(window_of({})).has_value());
}

TEST_CASE("volatility matches a brute-force log scan and bounds the return") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> price(1.0, 9.0);
    std::uniform_int_distribution<int> count(1, 40);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Tick> ticks;
        const int c = count(rng);
        for (int j = 0; j < c; ++j) ticks.push_back({j * 500, price(rng), 100});
        const Window w = window_of(ticks);

        double max_log = -1e300, min_log = 1e300;
        for (const auto& t : ticks) {
            max_log = std::max(max_log, std::log(t.price));
            min_log = std::min(min_log, std::log(t.price));
        }
        const double v = *window_volatility(w);
        CHECK(v == doctest::Approx(max_log - min_log).epsilon(1e-12));

        // v bounds the window's own first-to-last log return.
        const double own_return =
            std::log(w.transactions.back().price) - std::log(w.transactions.front().price);
        CHECK(v >= std::fabs(own_return) - 1e-12);
    }
}

TEST_CASE("price rescaling leaves r and v unchanged") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> price(1.0, 9.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Tick> ticks;
        for (int j = 0; j < 12; ++j) ticks.push_back({j * 500, price(rng), 100});
        const Window w = window_of(ticks);
        const double ref = price(rng);

        for (const double c : {0.01, 7.0, 250.0}) {
            std::vector<Tick> scaled = ticks;
            for (auto& t : scaled) t.price *= c;
            const Window ws = window_of(scaled);
            CHECK(*window_return(ws, ref * c) ==
                  doctest::Approx(*window_return(w, ref)).epsilon(1e-9));
            CHECK(*window_volatility(ws) == doctest::Approx(*window_volatility(w)).epsilon(1e-9));
        }
    }
}

TEST_CASE("intertrade duration") {
    CHECK(*intertrade_duration(window_of({{0, 4.6, 1}, {10000, 4.6, 1}, {30000, 4.6, 1}})) ==
          doctest::Approx(15.0));

    // Evenly spaced trades: tau equals the gap; zero gaps count.
    std::vector<Tick> even;
    for (int j = 0; j <= 8; ++j) even.push_back({j * 2500, 4.6, 1});
    CHECK(*intertrade_duration(window_of(even)) == doctest::Approx(2.5));
    CHECK(*intertrade_duration(window_of({{500, 4.6, 1}, {500, 4.6, 1}, {1500, 4.6, 1}})) ==
          doctest::Approx(0.5));

    CHECK_FALSE(intertrade_duration(window_of({{0, 4.6, 1}})).has_value());
    CHECK_FALSE(intertrade_duration(window_of({})).has_value());
}

TEST_CASE("tau telescoping identity and time-shift invariance") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> stamp(0, 299999);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> times;
        for (int j = 0; j < 25; ++j) times.push_back(stamp(rng));
        std::sort(times.begin(), times.end());
        std::vector<Tick> ticks;
        for (const auto t : times) ticks.push_back({t, 4.6, 1});
        const Window w = window_of(ticks);

        const double expected = static_cast<double>(times.back() - times.front()) /
                                (static_cast<double>(times.size() - 1) * 1000.0);
        CHECK(*intertrade_duration(w) == doctest::Approx(expected).epsilon(1e-12));

        std::vector<Tick> shifted = ticks;
        for (auto& t : shifted) t.ms += 86400000;
        CHECK(*intertrade_duration(window_of(shifted)) == *intertrade_duration(w));
    }
}

TEST_CASE("trading volume") {
    CHECK(trading_volume(window_of({{0, 4.6, 100}, {1, 4.6, 200}, {2, 4.6, 300}})) == 600);
    CHECK(trading_volume(window_of({})) == 0);

    // Additivity over any partition of the window's trades.
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::int64_t> size(1, 100000);
    std::uniform_int_distribution<int> cut(0, 30);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Tick> ticks;
        for (int j = 0; j < 30; ++j) ticks.push_back({j * 100, 4.6, size(rng)});
        const int k = cut(rng);
        const std::vector<Tick> head(ticks.begin(), ticks.begin() + k);
        const std::vector<Tick> tail(ticks.begin() + k, ticks.end());
        CHECK(trading_volume(window_of(ticks)) ==
              trading_volume(window_of(head)) + trading_volume(window_of(tail)));
    }
}

TEST_CASE("compute_financial bundles the pieces") {
    const Window w = window_of({{0, 4.00, 100}, {10000, 4.20, 250}});
    const FinancialVars f = compute_financial(w, 4.10);
    CHECK(*f.log_return == doctest::Approx(std::log(4.20 / 4.10)).epsilon(1e-12));
    CHECK(*f.volatility == doctest::Approx(std::log(4.20 / 4.00)).epsilon(1e-12));
    CHECK(*f.intertrade_sec == doctest::Approx(10.0));
    CHECK(f.volume == 350);

    const FinancialVars empty = compute_financial(window_of({}), std::nullopt);
    CHECK_FALSE(empty.log_return.has_value());
    CHECK_FALSE(empty.volatility.has_value());
    CHECK_FALSE(empty.intertrade_sec.has_value());
    CHECK(empty.volume == 0);
}
