#pragma once

#include "tna/timeutil.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tna {

// One matched trade. txn_id is expected to be unique per dataset; the parser
// does not police uniqueness (the generator guarantees it, and downstream
// ordering only uses the id as a deterministic tie-break).
struct Transaction {
    std::string txn_id;
    std::string buyer_id;
    std::string seller_id;
    TimestampMs timestamp = 0;
    double price = 0.0;     // > 0
    std::int64_t size = 0;  // > 0, shares
    char side = ' ';        // optional 'B'/'S' indicator; recorded, never used

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct RowRejection {
    std::size_t line_no = 0;  // 1-based physical line number in the source
    std::string reason;
};

struct ParseReport {
    std::size_t rows_seen = 0;  // data rows (header excluded)
    std::size_t accepted = 0;
    std::vector<RowRejection> rejections;
};

// Header names for the seven fields; "side" may be absent from the input.
struct ColumnMapping {
    std::string txn_id = "txn_id";
    std::string timestamp = "timestamp";
    std::string buyer_id = "buyer_id";
    std::string seller_id = "seller_id";
    std::string price = "price";
    std::string size = "size";
    std::string side = "side";
};

// Parses a delimited transaction file (comma or tab, auto-detected from the
// header row). Lines starting with '#' are skipped. Malformed rows become
// RowRejection entries; rows_seen == accepted + rejections.size().
// Throws std::runtime_error when the source or header is unusable.
std::vector<Transaction> parse_transactions(std::string_view text, ParseReport& report,
                                            const ColumnMapping& cols = {});
std::vector<Transaction> parse_transactions_file(const std::string& path, ParseReport& report,
                                                 const ColumnMapping& cols = {});

// Writes the exact format parse_transactions accepts. price_decimals controls
// fixed-point price rendering. Extra header lines (e.g. provenance) can be
// passed as '#' comments.
void write_transactions_csv(std::ostream& out, std::span<const Transaction> txns,
                            int price_decimals, const std::vector<std::string>& comment_lines = {});

void write_rejection_report(std::ostream& out, const ParseReport& report);

struct SessionInterval {
    std::int64_t open_ms = 0;   // clock time, ms since midnight
    std::int64_t close_ms = 0;  // exclusive except at the day close (see assign_windows)
};

struct WindowSpec {
    std::vector<SessionInterval> sessions;  // disjoint, ascending
    std::int64_t window_ms = 5 * kMillisPerMinute;

    int windows_per_day() const;
    // Throws std::invalid_argument on empty/overlapping sessions, non-positive
    // window length, or a session whose span is not a whole number of windows.
    void validate() const;

    // 09:30-11:30 and 13:00-15:00, 5-minute windows: 48 per day.
    static WindowSpec standard();
};

struct Window {
    std::int64_t epoch_day = 0;
    int index = 0;          // [0, windows_per_day)
    TimestampMs start = 0;  // absolute ms
    TimestampMs end = 0;
    std::vector<Transaction> transactions;  // sorted by (timestamp, txn_id)
};

struct WindowAssignment {
    std::vector<Window> windows;  // ordered by (day, index); empty windows materialized
    std::vector<Transaction> discarded;  // out-of-session prints, (timestamp, txn_id) order
};

// Buckets transactions into intraday windows. Window intervals are half-open
// [start, end); the final window of the trading day is closed on the right so
// the closing print at exactly the day's last session close is kept. Every
// calendar day present in the input materializes a full set of windows.
WindowAssignment assign_windows(std::vector<Transaction> txns, const WindowSpec& spec);

}  // namespace tna
