#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tna {

// An ordered series of optional reals, aligned to (date, window index) by the
// pipeline. Missing entries stay in place; the tests drop them with order
// preserved, correlations use pairwise deletion.
struct Series {
    std::string name;
    std::vector<std::optional<double>> values;
};

std::vector<double> non_missing(const Series& s);

struct DescriptiveStats {
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double maximum = 0.0;
    double minimum = 0.0;
    double std_dev = 0.0;                  // sample, n-1
    std::optional<double> skewness;        // m3 / m2^(3/2), population moments
    std::optional<double> kurtosis;        // m4 / m2^2, raw (not excess)
};

// Moments over the non-missing values. Throws std::invalid_argument with
// fewer than two of them. Zero variance leaves skewness/kurtosis missing.
DescriptiveStats describe(const Series& s);

// Augmented Dickey-Fuller regression with constant, no trend:
//   dy_t = alpha + beta * y_{t-1} + sum_{i=1..p} gamma_i * dy_{t-i} + e_t.
// The verdict compares the t-statistic on beta with the tabulated large-T
// critical values for the constant case; no p-value interpolation.
struct AdfResult {
    double statistic = 0.0;
    int lag_order = 0;
    double crit_1pct = 0.0;
    double crit_5pct = 0.0;
    double crit_10pct = 0.0;
    double level = 0.05;
    bool reject = false;  // reject the unit-root null at `level`
};

// lag_order defaults to floor(4 * (T/100)^(1/4)) over the T non-missing
// values. Throws std::invalid_argument when T < 25 or level is not one of
// 0.01 / 0.05 / 0.10.
AdfResult adf_test(const Series& s, std::optional<int> lag_order = std::nullopt,
                   double level = 0.05);

struct TestResult {
    double statistic = 0.0;
    double p_value = 0.0;
    double level = 0.05;
    bool reject = false;
};

// JB = T/6 * (S^2 + (K-3)^2 / 4), chi-square with 2 df. Throws with fewer
// than 8 non-missing values or zero variance.
TestResult jarque_bera(const Series& s, double level = 0.05);
double jarque_bera_statistic(std::size_t count, double skewness, double raw_kurtosis);

// Q = T(T+2) * sum_{h=1..lags} acf_h^2 / (T-h), chi-square with `lags` df.
// Throws unless T > lags >= 1.
TestResult ljung_box(const Series& s, int lags = 20, double level = 0.05);

struct CorrelationCell {
    double rho = 0.0;
    double p_value = 0.0;
    std::string stars;   // "***" p<0.001, "**" p<0.01, "*" p<0.05, else ""
    std::size_t n = 0;   // pairwise-complete observations
};

std::string significance_stars(double p_value);

// Sample Pearson correlation over pairwise-complete observations; two-sided
// p-value from the t distribution with n-2 df. Missing (nullopt) with fewer
// than 3 pairs or zero variance on either side.
std::optional<CorrelationCell> pearson(const Series& x, const Series& y);

struct CorrelationTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::optional<CorrelationCell>>> cells;  // [row][col]
};

// One pearson() cell per (row, col) pair, pairwise deletion per cell.
CorrelationTable correlation_table(const std::vector<Series>& rows,
                                   const std::vector<Series>& cols);

}  // namespace tna
