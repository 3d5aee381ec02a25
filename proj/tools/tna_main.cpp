#include "tna/config.hpp"
#include "tna/pipeline.hpp"
#include "tna/synth.hpp"
#include "tna/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("error writing " + path.string());
}

std::vector<std::string> provenance_lines(const tna::RunConfig& cfg) {
    return {std::string(tna::kToolName) + " " + tna::kToolVersion, "config " + cfg.hash_hex()};
}

std::string format_cell(const std::optional<double>& v, const char* fmt) {
    if (!v) return "--";
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, *v);
    return buf;
}

std::string render_summary(const tna::SummaryTable& table, const std::string& title) {
    std::ostringstream out;
    out << title << '\n';
    out << "          ";
    for (const auto& c : table.col_labels) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%14s", c.c_str());
        out << buf;
    }
    out << '\n';
    for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
        char label[32];
        std::snprintf(label, sizeof(label), "%-10s", table.row_labels[r].c_str());
        out << label;
        for (const auto& cell : table.cells[r]) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%14s", format_cell(cell, "%.6g").c_str());
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_correlations(const tna::CorrelationTable& table) {
    std::ostringstream out;
    out << "Correlations between financial variables and network metrics\n";
    out << "(*** p<0.001, ** p<0.01, * p<0.05)\n";
    out << "      ";
    for (const auto& c : table.col_labels) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%13s", c.c_str());
        out << buf;
    }
    out << '\n';
    for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
        char label[16];
        std::snprintf(label, sizeof(label), "%-6s", table.row_labels[r].c_str());
        out << label;
        for (const auto& cell : table.cells[r]) {
            std::string text = "--";
            if (cell) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.3f%s", cell->rho, cell->stars.c_str());
                text = buf;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%13s", text.c_str());
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string summary_csv(const tna::SummaryTable& table, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "stat";
    for (const auto& c : table.col_labels) out << ',' << c;
    out << '\n';
    for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
        out << table.row_labels[r];
        for (const auto& cell : table.cells[r]) {
            out << ',';
            if (cell) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.12g", *cell);
                out << buf;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string correlations_csv(const tna::CorrelationTable& table,
                             const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "row,col,rho,p_value,stars,n\n";
    for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
        for (std::size_t c = 0; c < table.col_labels.size(); ++c) {
            out << table.row_labels[r] << ',' << table.col_labels[c] << ',';
            if (const auto& cell = table.cells[r][c]) {
                char buf[80];
                std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%s,%zu", cell->rho, cell->p_value,
                              cell->stars.c_str(), cell->n);
                out << buf;
            } else {
                out << ",,,0";
            }
            out << '\n';
        }
    }
    return out.str();
}

struct TestRow {
    std::string series;
    std::string test;
    std::string statistic;
    std::string p_value;
    std::string verdict;
    std::string detail;
};

std::vector<TestRow> run_test_battery(const std::vector<tna::Series>& all, const tna::RunConfig& cfg) {
    std::vector<TestRow> rows;
    char buf[64];
    for (const auto& s : all) {
        {
            TestRow row{s.name, "ADF", "", "", "", ""};
            try {
                const std::optional<int> lag =
                    cfg.adf_lag_order >= 0 ? std::optional<int>(cfg.adf_lag_order) : std::nullopt;
                const tna::AdfResult r = tna::adf_test(s, lag, cfg.significance_level);
                std::snprintf(buf, sizeof(buf), "%.6g", r.statistic);
                row.statistic = buf;
                row.verdict = r.reject ? "reject" : "fail-to-reject";
                std::snprintf(buf, sizeof(buf), "lag_order=%d;crit_5pct=%.2f", r.lag_order,
                              r.crit_5pct);
                row.detail = buf;
            } catch (const std::exception& e) {
                row.verdict = "error";
                row.detail = e.what();
            }
            rows.push_back(std::move(row));
        }
        {
            TestRow row{s.name, "JarqueBera", "", "", "", ""};
            try {
                const tna::TestResult r = tna::jarque_bera(s, cfg.significance_level);
                std::snprintf(buf, sizeof(buf), "%.6g", r.statistic);
                row.statistic = buf;
                std::snprintf(buf, sizeof(buf), "%.6g", r.p_value);
                row.p_value = buf;
                row.verdict = r.reject ? "reject" : "fail-to-reject";
            } catch (const std::exception& e) {
                row.verdict = "error";
                row.detail = e.what();
            }
            rows.push_back(std::move(row));
        }
        {
            TestRow row{s.name, "LjungBox", "", "", "", ""};
            try {
                const tna::TestResult r = tna::ljung_box(s, cfg.ljung_box_lags, cfg.significance_level);
                std::snprintf(buf, sizeof(buf), "%.6g", r.statistic);
                row.statistic = buf;
                std::snprintf(buf, sizeof(buf), "%.6g", r.p_value);
                row.p_value = buf;
                row.verdict = r.reject ? "reject" : "fail-to-reject";
                std::snprintf(buf, sizeof(buf), "lags=%d", cfg.ljung_box_lags);
                row.detail = buf;
            } catch (const std::exception& e) {
                row.verdict = "error";
                row.detail = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string tests_csv(const std::vector<TestRow>& rows, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "series,test,statistic,p_value,verdict,detail\n";
    for (const auto& r : rows) {
        out << r.series << ',' << r.test << ',' << r.statistic << ',' << r.p_value << ','
            << r.verdict << ',' << r.detail << '\n';
    }
    return out.str();
}

std::string render_tests(const std::vector<TestRow>& rows) {
    std::ostringstream out;
    out << "Stationarity / normality / autocorrelation battery\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-6s %-11s %14s %12s %-15s %s\n", "series", "test",
                  "statistic", "p_value", "verdict", "detail");
    out << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-6s %-11s %14s %12s %-15s %s\n", r.series.c_str(),
                      r.test.c_str(), r.statistic.c_str(), r.p_value.c_str(), r.verdict.c_str(),
                      r.detail.c_str());
        out << buf;
    }
    return out.str();
}

int cmd_generate(const tna::RunConfig& cfg, const std::string& outdir,
                 const std::string& usage) {
    if (cfg.preset.empty()) {
        std::cerr << "error: generate needs --preset (or a 'preset' config key)\n" << usage;
        return kExitUsage;
    }
    const tna::ScenarioConfig scenario = cfg.scenario();
    const std::vector<tna::Transaction> txns = tna::generate(scenario);

    const fs::path dir(outdir);
    const fs::path csv_path = dir / "transactions.csv";
    std::ostringstream csv;
    tna::write_transactions_csv(csv, txns, scenario.price_decimals, provenance_lines(cfg));
    write_file(csv_path, csv.str());

    json manifest;
    manifest["tool"] = tna::kToolName;
    manifest["version"] = tna::kToolVersion;
    manifest["command"] = "generate";
    manifest["preset"] = cfg.preset;
    manifest["seed"] = cfg.seed;
    manifest["days"] = cfg.days;
    manifest["transactions"] = txns.size();
    manifest["config_hash"] = cfg.hash_hex();
    manifest["output"] = csv_path.string();
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    write_file(dir / "run_config.txt", cfg.to_text());

    std::cout << "generated " << txns.size() << " transactions (preset " << cfg.preset << ", seed "
              << cfg.seed << ", " << cfg.days << " days) -> " << csv_path.string() << '\n';
    return kExitOk;
}

int cmd_analyze(const tna::RunConfig& cfg, const std::string& input, const std::string& outdir,
                const std::string& dump_window) {
    const tna::WindowSpec spec = cfg.window_spec();

    tna::ParseReport report;
    std::vector<tna::Transaction> txns = tna::parse_transactions_file(input, report);
    if (txns.empty()) {
        std::cerr << "warning: no usable transactions in " << input << '\n';
    }

    tna::AnalyzeOptions options;
    options.overnight_carry = cfg.overnight_carry;
    options.return_from_window_first = cfg.return_reference == "window_first";
    options.threads = cfg.threads;

    tna::WindowAssignment assignment;
    const std::vector<tna::WindowRecord> records =
        tna::analyze(std::move(txns), spec, options, &assignment);

    const fs::path dir(outdir);
    std::ostringstream records_text;
    tna::write_records_csv(records_text, records, provenance_lines(cfg));
    write_file(dir / "records.csv", records_text.str());
    write_file(dir / "run_config.txt", cfg.to_text());

    const fs::path rejects_path = dir / "rejections.csv";
    std::ostringstream rejects;
    for (const auto& c : provenance_lines(cfg)) rejects << "# " << c << '\n';
    tna::write_rejection_report(rejects, report);
    write_file(rejects_path, rejects.str());

    if (!dump_window.empty()) {
        const std::size_t colon = dump_window.rfind(':');
        if (colon == std::string::npos) throw std::runtime_error("--dump-window expects DATE:INDEX");
        const auto date = tna::parse_date(dump_window.substr(0, colon));
        if (!date) throw std::runtime_error("--dump-window expects DATE:INDEX");
        const int index = std::stoi(dump_window.substr(colon + 1));
        const std::int64_t day = tna::days_from_civil(*date);
        bool found = false;
        for (const auto& w : assignment.windows) {
            if (w.epoch_day == day && w.index == index) {
                std::ostringstream edges;
                tna::write_edge_list(edges, tna::build_network(w));
                write_file(dir / "window_edges.csv", edges.str());
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("window " + dump_window + " not present in input");
    }

    std::cout << "rows " << report.rows_seen << ", accepted " << report.accepted << ", rejected "
              << report.rejections.size() << " (report " << rejects_path.string() << ")\n";
    std::cout << "windows " << records.size() << ", discarded out-of-session "
              << assignment.discarded.size() << '\n';
    std::cout << "records -> " << (dir / "records.csv").string() << '\n';
    return kExitOk;
}

int cmd_report(const tna::RunConfig& cfg, const std::string& records_path,
               const std::string& outdir, bool with_tests) {
    const std::vector<tna::WindowRecord> records = tna::read_records_csv_file(records_path);
    const auto comments = provenance_lines(cfg);

    const tna::SummaryTable metrics = tna::summarize_metrics(records);
    const tna::SummaryTable finvars = tna::summarize_finvars(records);
    const tna::CorrelationTable corr = tna::correlate(records);

    const fs::path dir(outdir);
    write_file(dir / "summary_metrics.csv", summary_csv(metrics, comments));
    write_file(dir / "summary_finvars.csv", summary_csv(finvars, comments));
    write_file(dir / "correlations.csv", correlations_csv(corr, comments));

    std::string text;
    for (const auto& c : comments) text += "# " + c + "\n";
    text += '\n';
    text += render_summary(metrics, "Summary statistics of trading network metrics");
    text += '\n';
    text += render_summary(finvars, "Summary statistics of financial variables");
    text += '\n';
    text += render_correlations(corr);

    if (with_tests) {
        std::vector<tna::Series> all = tna::metric_series(records);
        const std::vector<tna::Series> fin = tna::finvar_series(records);
        all.insert(all.end(), fin.begin(), fin.end());
        const std::vector<TestRow> rows = run_test_battery(all, cfg);
        write_file(dir / "tests.csv", tests_csv(rows, comments));
        text += '\n';
        text += render_tests(rows);
    }

    write_file(dir / "report.txt", text);
    write_file(dir / "run_config.txt", cfg.to_text());
    std::cout << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    tna::RunConfig cfg;

    // The config file seeds cfg before CLI11 runs, so flags override it.
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg == "--config" && i + 1 < argc) config_path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0) config_path = std::string(arg.substr(9));
    }
    if (!config_path.empty()) {
        try {
            cfg.apply(tna::KeyValueConfig::load(config_path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitData;
        }
    }

    CLI::App app{"transaction-stream trading-network analytics"};
    app.require_subcommand(1);

    std::string config_sink;
    app.add_option("--config", config_sink, "key = value configuration file");

    auto* gen = app.add_subcommand("generate", "write synthetic order flow");
    std::string gen_outdir = ".";
    gen->add_option("--config", config_sink, "key = value configuration file");
    gen->add_option("--preset", cfg.preset, "scenario preset name");
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--days", cfg.days, "trading days to generate");
    gen->add_option("--traders", cfg.traders, "trader pool size override");
    gen->add_option("--base-rate", cfg.base_rate_per_min, "trades per minute override");
    gen->add_option("--price-start", cfg.price_start, "opening price override");
    gen->add_option("--start-date", cfg.start_date, "first trading day (YYYY-MM-DD)");
    gen->add_option("--outdir", gen_outdir, "output directory");

    auto* ana = app.add_subcommand("analyze", "build per-window records from transactions");
    std::string ana_input;
    std::string ana_outdir = ".";
    std::string ana_dump;
    ana->add_option("--config", config_sink, "key = value configuration file");
    ana->add_option("--input", ana_input, "transaction CSV")->required();
    ana->add_option("--outdir", ana_outdir, "output directory");
    ana->add_option("--sessions", cfg.sessions, "session intervals HH:MM-HH:MM,...");
    ana->add_option("--window-minutes", cfg.window_minutes, "window length in minutes");
    ana->add_flag("--overnight-carry,!--no-overnight-carry", cfg.overnight_carry,
                  "carry the return reference across days");
    ana->add_option("--return-reference", cfg.return_reference, "prev_close or window_first");
    ana->add_option("--threads", cfg.threads, "worker threads for per-window analysis");
    ana->add_option("--dump-window", ana_dump, "debug edge-list export, DATE:INDEX");

    auto* rep = app.add_subcommand("report", "summaries, correlation table and test battery");
    std::string rep_records;
    std::string rep_outdir = ".";
    bool rep_tests = false;
    rep->add_option("--config", config_sink, "key = value configuration file");
    rep->add_option("--records", rep_records, "records CSV from analyze")->required();
    rep->add_option("--outdir", rep_outdir, "output directory");
    rep->add_flag("--tests", rep_tests, "run the ADF / Jarque-Bera / Ljung-Box battery");
    rep->add_option("--ljung-box-lags", cfg.ljung_box_lags, "Ljung-Box lag count");
    rep->add_option("--adf-lag-order", cfg.adf_lag_order, "ADF lag order (-1 = automatic)");
    rep->add_option("--significance-level", cfg.significance_level, "test rejection level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }

    try {
        if (gen->parsed()) return cmd_generate(cfg, gen_outdir, gen->help());
        if (ana->parsed()) return cmd_analyze(cfg, ana_input, ana_outdir, ana_dump);
        if (rep->parsed()) return cmd_report(cfg, rep_records, rep_outdir, rep_tests);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
