#include "tna/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tna {

namespace {

constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

struct ResolvedColumns {
    std::size_t txn_id = kNoColumn;
    std::size_t timestamp = kNoColumn;
    std::size_t buyer_id = kNoColumn;
    std::size_t seller_id = kNoColumn;
    std::size_t price = kNoColumn;
    std::size_t size = kNoColumn;
    std::size_t side = kNoColumn;  // optional
    std::size_t required_max = 0;
};

std::vector<std::string_view> split_fields(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t pos = line.find(delim, begin);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(begin));
            break;
        }
        out.push_back(line.substr(begin, pos - begin));
        begin = pos + 1;
    }
    return out;
}

void split_fields_into(std::string_view line, char delim, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t begin = 0;
    while (true) {
        const std::size_t pos = line.find(delim, begin);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(begin));
            return;
        }
        out.push_back(line.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

ResolvedColumns resolve_columns(std::string_view header, char delim, const ColumnMapping& cols) {
    const auto names = split_fields(header, delim);
    ResolvedColumns rc;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == cols.txn_id) rc.txn_id = i;
        else if (names[i] == cols.timestamp) rc.timestamp = i;
        else if (names[i] == cols.buyer_id) rc.buyer_id = i;
        else if (names[i] == cols.seller_id) rc.seller_id = i;
        else if (names[i] == cols.price) rc.price = i;
        else if (names[i] == cols.size) rc.size = i;
        else if (names[i] == cols.side) rc.side = i;
    }
    const auto require = [&](std::size_t idx, const std::string& name) {
        if (idx == kNoColumn) throw std::runtime_error("header is missing column '" + name + "'");
        rc.required_max = std::max(rc.required_max, idx);
    };
    require(rc.txn_id, cols.txn_id);
    require(rc.timestamp, cols.timestamp);
    require(rc.buyer_id, cols.buyer_id);
    require(rc.seller_id, cols.seller_id);
    require(rc.price, cols.price);
    require(rc.size, cols.size);
    return rc;
}

std::optional<double> parse_price(std::string_view s) {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<std::int64_t> parse_size(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::vector<Transaction> parse_transactions(std::string_view text, ParseReport& report,
                                            const ColumnMapping& cols) {
    report = ParseReport{};
    std::vector<Transaction> out;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    const auto next_line = [&](std::string_view& line) -> bool {
        if (pos >= text.size()) return false;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        return true;
    };

    // Header: first non-comment, non-blank line.
    std::string_view header;
    bool have_header = false;
    while (next_line(header)) {
        if (header.empty() || header[0] == '#') continue;
        have_header = true;
        break;
    }
    if (!have_header) throw std::runtime_error("transaction source has no header row");

    const char delim = header.find('\t') != std::string_view::npos ? '\t' : ',';
    const ResolvedColumns rc = resolve_columns(header, delim, cols);

    // Rough row-count guess to avoid reallocation churn on large inputs.
    out.reserve(text.size() / 48 + 16);

    const auto reject = [&](std::size_t line, std::string reason) {
        report.rejections.push_back(RowRejection{line, std::move(reason)});
    };

    std::vector<std::string_view> fields;
    std::string_view line;
    while (next_line(line)) {
        if (line.empty() || line[0] == '#') continue;
        ++report.rows_seen;
        split_fields_into(line, delim, fields);
        if (fields.size() <= rc.required_max) {
            reject(line_no, "missing column");
            continue;
        }
        const auto ts = parse_timestamp(fields[rc.timestamp]);
        if (!ts) {
            reject(line_no, "malformed timestamp");
            continue;
        }
        const auto price = parse_price(fields[rc.price]);
        if (!price) {
            reject(line_no, "malformed price");
            continue;
        }
        if (*price <= 0.0) {
            reject(line_no, "non-positive price");
            continue;
        }
        const auto size = parse_size(fields[rc.size]);
        if (!size) {
            reject(line_no, "malformed size");
            continue;
        }
        if (*size <= 0) {
            reject(line_no, "non-positive size");
            continue;
        }
        if (fields[rc.txn_id].empty()) {
            reject(line_no, "empty txn_id");
            continue;
        }
        if (fields[rc.buyer_id].empty()) {
            reject(line_no, "empty buyer_id");
            continue;
        }
        if (fields[rc.seller_id].empty()) {
            reject(line_no, "empty seller_id");
            continue;
        }

        Transaction t;
        t.txn_id.assign(fields[rc.txn_id]);
        t.buyer_id.assign(fields[rc.buyer_id]);
        t.seller_id.assign(fields[rc.seller_id]);
        t.timestamp = *ts;
        t.price = *price;
        t.size = *size;
        if (rc.side != kNoColumn && rc.side < fields.size() && !fields[rc.side].empty()) {
            t.side = fields[rc.side][0];
        }
        out.push_back(std::move(t));
        ++report.accepted;
    }
    return out;
}

std::vector<Transaction> parse_transactions_file(const std::string& path, ParseReport& report,
                                                 const ColumnMapping& cols) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open transaction file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error reading transaction file: " + path);
    const std::string text = std::move(buf).str();
    return parse_transactions(text, report, cols);
}

void write_transactions_csv(std::ostream& out, std::span<const Transaction> txns,
                            int price_decimals, const std::vector<std::string>& comment_lines) {
    for (const auto& c : comment_lines) out << "# " << c << '\n';
    out << "txn_id,timestamp,buyer_id,seller_id,price,size,side\n";
    char buf[64];
    for (const auto& t : txns) {
        std::snprintf(buf, sizeof(buf), "%.*f", price_decimals, t.price);
        out << t.txn_id << ',' << format_timestamp(t.timestamp) << ',' << t.buyer_id << ','
            << t.seller_id << ',' << buf << ',' << t.size << ',';
        if (t.side != ' ') out << t.side;
        out << '\n';
    }
}

void write_rejection_report(std::ostream& out, const ParseReport& report) {
    out << "line_no,reason\n";
    for (const auto& r : report.rejections) out << r.line_no << ',' << r.reason << '\n';
}

int WindowSpec::windows_per_day() const {
    std::int64_t total = 0;
    for (const auto& s : sessions) total += s.close_ms - s.open_ms;
    return static_cast<int>(total / window_ms);
}

void WindowSpec::validate() const {
    if (window_ms <= 0) throw std::invalid_argument("window length must be positive");
    if (sessions.empty()) throw std::invalid_argument("at least one session interval required");
    std::int64_t prev_close = -1;
    for (const auto& s : sessions) {
        if (s.open_ms < 0 || s.close_ms > kMillisPerDay || s.open_ms >= s.close_ms) {
            throw std::invalid_argument("session interval out of range or empty");
        }
        if (s.open_ms < prev_close) {
            throw std::invalid_argument("session intervals must be disjoint and ascending");
        }
        if ((s.close_ms - s.open_ms) % window_ms != 0) {
            throw std::invalid_argument("session span must be a whole number of windows");
        }
        prev_close = s.close_ms;
    }
}

WindowSpec WindowSpec::standard() {
    WindowSpec spec;
    spec.sessions = {
        {9 * kMillisPerHour + 30 * kMillisPerMinute, 11 * kMillisPerHour + 30 * kMillisPerMinute},
        {13 * kMillisPerHour, 15 * kMillisPerHour},
    };
    spec.window_ms = 5 * kMillisPerMinute;
    return spec;
}

WindowAssignment assign_windows(std::vector<Transaction> txns, const WindowSpec& spec) {
    spec.validate();
    const int per_day = spec.windows_per_day();

    // Session -> first window index of that session.
    std::vector<int> session_offset(spec.sessions.size());
    int offset = 0;
    for (std::size_t i = 0; i < spec.sessions.size(); ++i) {
        session_offset[i] = offset;
        offset += static_cast<int>((spec.sessions[i].close_ms - spec.sessions[i].open_ms) /
                                   spec.window_ms);
    }
    const std::int64_t day_close = spec.sessions.back().close_ms;

    // Window index within the day, or -1 for out-of-session prints.
    const auto window_of = [&](std::int64_t ms) -> int {
        for (std::size_t i = 0; i < spec.sessions.size(); ++i) {
            const auto& s = spec.sessions[i];
            if (ms >= s.open_ms && ms < s.close_ms) {
                return session_offset[i] + static_cast<int>((ms - s.open_ms) / spec.window_ms);
            }
        }
        // Day close itself belongs to the last window (closed on the right).
        if (ms == day_close) return per_day - 1;
        return -1;
    };

    WindowAssignment result;

    // Distinct days present in the input, including days whose prints all fall
    // outside the sessions, so a day's record slots always exist.
    std::vector<std::int64_t> days;
    days.reserve(64);
    for (const auto& t : txns) days.push_back(epoch_day_of(t.timestamp));
    std::sort(days.begin(), days.end());
    days.erase(std::unique(days.begin(), days.end()), days.end());

    std::map<std::int64_t, std::size_t> day_base;  // epoch_day -> first window slot
    result.windows.reserve(days.size() * static_cast<std::size_t>(per_day));
    for (const std::int64_t day : days) {
        day_base[day] = result.windows.size();
        for (std::size_t i = 0; i < spec.sessions.size(); ++i) {
            const auto& s = spec.sessions[i];
            const int count = static_cast<int>((s.close_ms - s.open_ms) / spec.window_ms);
            for (int k = 0; k < count; ++k) {
                Window w;
                w.epoch_day = day;
                w.index = session_offset[i] + k;
                w.start = day * kMillisPerDay + s.open_ms + k * spec.window_ms;
                w.end = w.start + spec.window_ms;
                result.windows.push_back(std::move(w));
            }
        }
    }

    // Global sort once; per-window transaction lists inherit the order.
    std::stable_sort(txns.begin(), txns.end(), [](const Transaction& a, const Transaction& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.txn_id < b.txn_id;
    });

    for (auto& t : txns) {
        const std::int64_t day = epoch_day_of(t.timestamp);
        const int idx = window_of(t.timestamp - day * kMillisPerDay);
        if (idx < 0) {
            result.discarded.push_back(std::move(t));
        } else {
            result.windows[day_base[day] + static_cast<std::size_t>(idx)].transactions.push_back(
                std::move(t));
        }
    }
    return result;
}

}  // namespace tna
