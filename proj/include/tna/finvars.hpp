#pragma once

#include "tna/ingest.hpp"

#include <cstdint>
#include <optional>

namespace tna {

// Per-window financial variables. volume is always defined (0 for an empty
// window); the others go missing when the window lacks the trades they need.
struct FinancialVars {
    std::optional<double> log_return;     // r
    std::optional<double> volatility;     // v, log price range
    std::optional<double> intertrade_sec; // tau, mean gap in seconds
    std::int64_t volume = 0;              // w, shares
};

// r = ln(last trade price of the window) - ln(reference price). The reference
// is the closing trade price of the most recent earlier non-empty window
// (carried across empty windows, and overnight when enabled). Missing for an
// empty window or when no reference exists yet.
std::optional<double> window_return(const Window& window,
                                    std::optional<double> prev_reference_price);

// v = max ln(price) - min ln(price) over the window's trades; 0 for a single
// trade, missing for an empty window.
std::optional<double> window_volatility(const Window& window);

// tau = mean of successive timestamp gaps within the window, in seconds;
// zero gaps count. Missing with fewer than two trades.
std::optional<double> intertrade_duration(const Window& window);

// w = sum of trade sizes, each trade counted once.
std::int64_t trading_volume(const Window& window);

FinancialVars compute_financial(const Window& window,
                                std::optional<double> prev_reference_price);

}  // namespace tna
