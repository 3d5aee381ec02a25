#include "tna/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tna {

namespace {

const std::vector<std::string> kSummaryRows = {"Mean",      "Median",   "Maximum", "Minimum",
                                               "Std. Dev.", "Skewness", "Kurtosis"};

SummaryTable summarize_series(const std::vector<Series>& columns) {
    SummaryTable table;
    table.row_labels = kSummaryRows;
    table.cells.assign(kSummaryRows.size(), {});
    for (auto& row : table.cells) row.resize(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        table.col_labels.push_back(columns[c].name);
        std::size_t usable = 0;
        for (const auto& v : columns[c].values) usable += v.has_value();
        if (usable < 2) continue;  // column stays missing
        const DescriptiveStats d = describe(columns[c]);
        table.cells[0][c] = d.mean;
        table.cells[1][c] = d.median;
        table.cells[2][c] = d.maximum;
        table.cells[3][c] = d.minimum;
        table.cells[4][c] = d.std_dev;
        table.cells[5][c] = d.skewness;
        table.cells[6][c] = d.kurtosis;
    }
    return table;
}

void append_field(std::string& line, const std::optional<double>& v) {
    line.push_back(',');
    if (v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", *v);
        line.append(buf);
    }
}

std::optional<double> parse_opt_double(std::string_view s) {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::runtime_error("records: malformed numeric field");
    }
    return v;
}

std::int64_t parse_int_strict(std::string_view s, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::runtime_error(std::string("records: malformed ") + what);
    }
    return v;
}

}  // namespace

std::vector<WindowRecord> analyze_windows(const std::vector<Window>& windows,
                                          const AnalyzeOptions& options) {
    std::vector<WindowRecord> records(windows.size());

    // Phase 1, sequential: return reference prices in (date, index) order.
    std::vector<std::optional<double>> reference(windows.size());
    if (options.return_from_window_first) {
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (!windows[i].transactions.empty()) {
                reference[i] = windows[i].transactions.front().price;
            }
        }
    } else {
        std::optional<double> last_close = options.initial_reference;
        std::int64_t current_day = windows.empty() ? 0 : windows.front().epoch_day;
        for (std::size_t i = 0; i < windows.size(); ++i) {
            if (!options.overnight_carry && windows[i].epoch_day != current_day) {
                last_close = std::nullopt;
            }
            current_day = windows[i].epoch_day;
            reference[i] = last_close;
            if (!windows[i].transactions.empty()) {
                last_close = windows[i].transactions.back().price;
            }
        }
    }

    // Phase 2: per-window work, independent across windows.
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Window& w = windows[i];
            WindowRecord& rec = records[i];
            rec.epoch_day = w.epoch_day;
            rec.window_index = w.index;
            const TradingNetwork net = build_network(w);
            rec.n = net.node_count();
            rec.m = net.edge_count();
            rec.net = compute_all(net);
            rec.fin = compute_financial(w, reference[i]);
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || windows.size() < 2) {
        work(0, windows.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (windows.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(windows.size(), static_cast<std::size_t>(t) * chunk);
            const std::size_t end = std::min(windows.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<WindowRecord> analyze(std::vector<Transaction> transactions, const WindowSpec& spec,
                                  const AnalyzeOptions& options, WindowAssignment* assignment_out) {
    WindowAssignment assignment = assign_windows(std::move(transactions), spec);
    std::vector<WindowRecord> records = analyze_windows(assignment.windows, options);
    if (assignment_out) *assignment_out = std::move(assignment);
    return records;
}

std::vector<Series> metric_series(const std::vector<WindowRecord>& records) {
    std::vector<Series> s(5);
    s[0].name = "C_k";
    s[1].name = "C_s";
    s[2].name = "e_k";
    s[3].name = "e_s";
    s[4].name = "l";
    for (auto& series : s) series.values.reserve(records.size());
    for (const auto& r : records) {
        s[0].values.push_back(r.net.ck);
        s[1].values.push_back(r.net.cs);
        s[2].values.push_back(r.net.ek);
        s[3].values.push_back(r.net.es);
        s[4].values.push_back(r.net.path_length);
    }
    return s;
}

std::vector<Series> finvar_series(const std::vector<WindowRecord>& records) {
    std::vector<Series> s(4);
    s[0].name = "r";
    s[1].name = "v";
    s[2].name = "tau";
    s[3].name = "w";
    for (auto& series : s) series.values.reserve(records.size());
    for (const auto& r : records) {
        s[0].values.push_back(r.fin.log_return);
        s[1].values.push_back(r.fin.volatility);
        s[2].values.push_back(r.fin.intertrade_sec);
        s[3].values.push_back(static_cast<double>(r.fin.volume));
    }
    return s;
}

SummaryTable summarize_metrics(const std::vector<WindowRecord>& records) {
    return summarize_series(metric_series(records));
}

SummaryTable summarize_finvars(const std::vector<WindowRecord>& records) {
    return summarize_series(finvar_series(records));
}

CorrelationTable correlate(const std::vector<WindowRecord>& records) {
    return correlation_table(finvar_series(records), metric_series(records));
}

void write_records_csv(std::ostream& out, const std::vector<WindowRecord>& records,
                       const std::vector<std::string>& comment_lines) {
    for (const auto& c : comment_lines) out << "# " << c << '\n';
    out << "date,window,n,m,C_k_in,C_k_out,C_k,C_s_in,C_s_out,C_s,e_k,e_s,l,r,v,tau,w\n";
    std::string line;
    for (const auto& r : records) {
        line.clear();
        line += format_date(r.epoch_day);
        line += ',';
        line += std::to_string(r.window_index);
        line += ',';
        line += std::to_string(r.n);
        line += ',';
        line += std::to_string(r.m);
        append_field(line, r.net.ck_in);
        append_field(line, r.net.ck_out);
        append_field(line, r.net.ck);
        append_field(line, r.net.cs_in);
        append_field(line, r.net.cs_out);
        append_field(line, r.net.cs);
        append_field(line, r.net.ek);
        append_field(line, r.net.es);
        append_field(line, r.net.path_length);
        append_field(line, r.fin.log_return);
        append_field(line, r.fin.volatility);
        append_field(line, r.fin.intertrade_sec);
        line += ',';
        line += std::to_string(r.fin.volume);
        line += '\n';
        out << line;
    }
}

std::vector<WindowRecord> read_records_csv(std::string_view text) {
    std::vector<WindowRecord> records;
    std::size_t pos = 0;
    bool header_seen = false;
    std::vector<std::string_view> fields;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "date,window,n,m,C_k_in,C_k_out,C_k,C_s_in,C_s_out,C_s,e_k,e_s,l,r,v,tau,w") {
                throw std::runtime_error("records: unexpected header");
            }
            header_seen = true;
            continue;
        }
        fields.clear();
        std::size_t begin = 0;
        while (true) {
            const std::size_t comma = line.find(',', begin);
            if (comma == std::string_view::npos) {
                fields.push_back(line.substr(begin));
                break;
            }
            fields.push_back(line.substr(begin, comma - begin));
            begin = comma + 1;
        }
        if (fields.size() != 17) throw std::runtime_error("records: wrong column count");

        WindowRecord r;
        const auto date = parse_date(fields[0]);
        if (!date) throw std::runtime_error("records: malformed date");
        r.epoch_day = days_from_civil(*date);
        r.window_index = static_cast<int>(parse_int_strict(fields[1], "window index"));
        r.n = static_cast<std::size_t>(parse_int_strict(fields[2], "node count"));
        r.m = static_cast<std::size_t>(parse_int_strict(fields[3], "edge count"));
        r.net.ck_in = parse_opt_double(fields[4]);
        r.net.ck_out = parse_opt_double(fields[5]);
        r.net.ck = parse_opt_double(fields[6]);
        r.net.cs_in = parse_opt_double(fields[7]);
        r.net.cs_out = parse_opt_double(fields[8]);
        r.net.cs = parse_opt_double(fields[9]);
        r.net.ek = parse_opt_double(fields[10]);
        r.net.es = parse_opt_double(fields[11]);
        r.net.path_length = parse_opt_double(fields[12]);
        r.fin.log_return = parse_opt_double(fields[13]);
        r.fin.volatility = parse_opt_double(fields[14]);
        r.fin.intertrade_sec = parse_opt_double(fields[15]);
        r.fin.volume = parse_int_strict(fields[16], "volume");
        records.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("records: missing header");
    return records;
}

std::vector<WindowRecord> read_records_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open records file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_records_csv(std::move(buf).str());
}

}  // namespace tna
