#include "tna/finvars.hpp"

#include <algorithm>
#include <cmath>

namespace tna {

std::optional<double> window_return(const Window& window,
                                    std::optional<double> prev_reference_price) {
    if (window.transactions.empty() || !prev_reference_price) return std::nullopt;
    return std::log(window.transactions.back().price) - std::log(*prev_reference_price);
}

std::optional<double> window_volatility(const Window& window) {
    if (window.transactions.empty()) return std::nullopt;
    double lo = window.transactions.front().price;
    double hi = lo;
    for (const auto& t : window.transactions) {
        lo = std::min(lo, t.price);
        hi = std::max(hi, t.price);
    }
    return std::log(hi) - std::log(lo);
}

std::optional<double> intertrade_duration(const Window& window) {
    const auto& txns = window.transactions;
    if (txns.size() < 2) return std::nullopt;
    std::int64_t gap_ms_sum = 0;
    for (std::size_t i = 1; i < txns.size(); ++i) {
        gap_ms_sum += txns[i].timestamp - txns[i - 1].timestamp;
    }
    return static_cast<double>(gap_ms_sum) /
           (static_cast<double>(txns.size() - 1) * 1000.0);
}

std::int64_t trading_volume(const Window& window) {
    std::int64_t sum = 0;
    for (const auto& t : window.transactions) sum += t.size;
    return sum;
}

FinancialVars compute_financial(const Window& window,
                                std::optional<double> prev_reference_price) {
    FinancialVars f;
    f.log_return = window_return(window, prev_reference_price);
    f.volatility = window_volatility(window);
    f.intertrade_sec = intertrade_duration(window);
    f.volume = trading_volume(window);
    return f;
}

}  // namespace tna
