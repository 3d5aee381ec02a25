#pragma once

#include "tna/finvars.hpp"
#include "tna/netmetrics.hpp"
#include "tna/stats.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tna {

// One row of the aligned per-window series: network size plus the five
// topological metrics and four financial variables.
struct WindowRecord {
    std::int64_t epoch_day = 0;
    int window_index = 0;
    std::size_t n = 0;  // traders
    std::size_t m = 0;  // edges == transactions
    NetworkMetrics net;
    FinancialVars fin;
};

struct AnalyzeOptions {
    bool overnight_carry = true;  // return reference carries across days
    // Sensitivity alternative: reference the window's own first trade instead
    // of the previous non-empty window's close.
    bool return_from_window_first = false;
    // Seeds the return-reference fold, e.g. with the closing price of an
    // earlier chunk when a dataset is streamed in pieces.
    std::optional<double> initial_reference;
    int threads = 1;
};

// Two-phase evaluation: an ordered pass establishes return reference prices,
// then per-window work proceeds (optionally in parallel); records come back
// ordered by (date, index), one per window.
std::vector<WindowRecord> analyze_windows(const std::vector<Window>& windows,
                                          const AnalyzeOptions& options = {});
std::vector<WindowRecord> analyze(std::vector<Transaction> transactions, const WindowSpec& spec,
                                  const AnalyzeOptions& options = {},
                                  WindowAssignment* assignment_out = nullptr);

// Summary-statistics grid: rows Mean, Median, Maximum, Minimum, Std. Dev.,
// Skewness, Kurtosis; one column per series.
struct SummaryTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::optional<double>>> cells;  // [row][col]
};

// The five metric series C_k, C_s, e_k, e_s, l and the four financial series
// r, v, tau, w, aligned 1:1 with the record list.
std::vector<Series> metric_series(const std::vector<WindowRecord>& records);
std::vector<Series> finvar_series(const std::vector<WindowRecord>& records);

SummaryTable summarize_metrics(const std::vector<WindowRecord>& records);
SummaryTable summarize_finvars(const std::vector<WindowRecord>& records);

// 4 financial rows x 5 metric columns, pairwise deletion per cell.
CorrelationTable correlate(const std::vector<WindowRecord>& records);

// Delimited records: date,window,n,m,C_k_in,C_k_out,C_k,C_s_in,C_s_out,C_s,
// e_k,e_s,l,r,v,tau,w. Missing values render as empty fields; comment lines
// go first as '#' prefixed provenance.
void write_records_csv(std::ostream& out, const std::vector<WindowRecord>& records,
                       const std::vector<std::string>& comment_lines = {});
std::vector<WindowRecord> read_records_csv(std::string_view text);
std::vector<WindowRecord> read_records_csv_file(const std::string& path);

}  // namespace tna
