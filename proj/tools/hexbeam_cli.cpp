// Command-line front end: loads a JSON config, runs a scenario and writes the
// results as CSV plus a sidecar metadata record. Data rows are deterministic
// for a fixed (config, seed, trials) regardless of --threads.

#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hexbeam/config.hpp"
#include "hexbeam/stochastic.hpp"

namespace {

using namespace hexbeam;

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    long seed = -1;
    long trials = -1;
    int threads = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--out", opts.out_path, "output CSV path");
    cmd->add_option("--seed", opts.seed, "override the scenario seed");
    cmd->add_option("--trials", opts.trials, "override the trial count");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
}

RunConfig resolve_config(const CommonOpts& opts) {
    RunConfig cfg = opts.config_path.empty() ? default_run_config() : load_config(opts.config_path);
    if (opts.seed >= 0) {
        cfg.scenario.seed = static_cast<std::uint64_t>(opts.seed);
        for (Scenario& sc : cfg.compare) sc.seed = static_cast<std::uint64_t>(opts.seed);
    }
    if (opts.trials > 0) {
        cfg.scenario.n_trials = opts.trials;
        for (Scenario& sc : cfg.compare) sc.n_trials = opts.trials;
    }
    if (opts.threads >= 0) cfg.threads = opts.threads;
    return cfg;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const RunConfig& cfg) : path_(path), out_(path) {
        if (!out_) throw std::runtime_error("cannot open output file '" + path + "'");
        char hash[32];
        std::snprintf(hash, sizeof(hash), "%016" PRIx64, config_hash(cfg));
        out_ << "# config_hash=" << hash << "\n";
        out_ << "# seed=" << cfg.scenario.seed << "\n";
    }

    void header(const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out_ << (i ? "," : "") << cols[i];
        out_ << "\n";
    }

    void row(const std::vector<double>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            out_ << (i ? "," : "") << format_number(vals[i]);
        out_ << "\n";
    }

    void raw_row(const std::string& line) { out_ << line << "\n"; }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

void write_metadata(const std::string& csv_path, const std::string& subcommand,
                    const RunConfig& cfg) {
    nlohmann::json meta;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016" PRIx64, config_hash(cfg));
    meta["subcommand"] = subcommand;
    meta["config_hash"] = hash;
    meta["seed"] = cfg.scenario.seed;
    meta["n_trials"] = cfg.scenario.n_trials;
    meta["threads"] = cfg.threads;
    meta["output"] = csv_path;
    std::time_t now = std::time(nullptr);
    char stamp[64];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["timestamp_utc"] = stamp;
    std::ofstream out(csv_path + ".meta.json");
    out << meta.dump(2) << "\n";
}

int cmd_coverage(const CommonOpts& opts) {
    RunConfig cfg = resolve_config(opts);
    std::string out_path = opts.out_path.empty() ? "coverage.csv" : opts.out_path;
    CcdfCurve curve = coverage_curve(cfg.net, cfg.scenario, cfg.thresholds_dB, cfg.threads);
    CsvWriter csv(out_path, cfg);
    csv.header({"threshold_dB", "coverage", "stderr", "n_trials"});
    for (std::size_t i = 0; i < curve.thresholds_dB.size(); ++i)
        csv.row({curve.thresholds_dB[i], curve.coverage[i], curve.stderr_[i],
                 static_cast<double>(curve.n_trials)});
    write_metadata(out_path, "coverage", cfg);
    return 0;
}

int cmd_throughput(const CommonOpts& opts) {
    RunConfig cfg = resolve_config(opts);
    std::string out_path = opts.out_path.empty() ? "throughput.csv" : opts.out_path;
    auto points = throughput_vs_load(cfg.net, cfg.scenario, cfg.eta_grid, cfg.threads);
    CsvWriter csv(out_path, cfg);
    csv.header({"eta", "mean_throughput_bps", "stderr_bps", "n_trials"});
    for (const LoadPoint& p : points)
        csv.row({p.eta, p.mean_throughput_bps, p.stderr_throughput_bps,
                 static_cast<double>(cfg.scenario.n_trials)});
    write_metadata(out_path, "throughput", cfg);
    return 0;
}

int cmd_compare(const CommonOpts& opts) {
    RunConfig cfg = resolve_config(opts);
    if (cfg.compare.size() < 2)
        throw ConfigError("compare", "needs at least two scenarios");
    std::string out_path = opts.out_path.empty() ? "compare.csv" : opts.out_path;
    auto stats = compare_scenarios(cfg.net, cfg.compare, cfg.thresholds_dB, cfg.threads);

    std::vector<std::string> labels;
    for (std::size_t k = 0; k < cfg.compare.size(); ++k) {
        std::string l = cfg.compare[k].label;
        if (l.empty()) l = "scenario" + std::to_string(k);
        labels.push_back(l);
    }
    CsvWriter csv(out_path, cfg);
    std::vector<std::string> cols{"threshold_dB"};
    for (const std::string& l : labels) {
        cols.push_back("coverage_" + l);
        cols.push_back("stderr_" + l);
    }
    for (std::size_t k = 1; k < labels.size(); ++k)
        cols.push_back("delta_" + labels[k] + "_vs_" + labels[0]);
    csv.header(cols);
    for (std::size_t i = 0; i < cfg.thresholds_dB.size(); ++i) {
        std::vector<double> row{cfg.thresholds_dB[i]};
        for (const ScenarioStats& st : stats) {
            row.push_back(st.curve.coverage[i]);
            row.push_back(st.curve.stderr_[i]);
        }
        for (std::size_t k = 1; k < stats.size(); ++k)
            row.push_back(stats[k].curve.coverage[i] - stats[0].curve.coverage[i]);
        csv.row(row);
    }
    write_metadata(out_path, "compare", cfg);
    return 0;
}

int cmd_expected_isr(const CommonOpts& opts) {
    RunConfig cfg = resolve_config(opts);
    std::string out_path = opts.out_path.empty() ? "expected_isr.csv" : opts.out_path;
    const ChannelParams& ch = cfg.net.channel;
    const Scenario& sc = cfg.scenario;

    ExpectedIsrModel model;
    model.delta_km = cfg.net.delta_km;
    model.two_b = ch.two_b;
    model.sigma_ratio_dB = ch.sigma_ratio_dB;
    model.eta = sc.eta;
    model.params = PatternParams::from_beam_widths(sc.theta_h3dB_deg * kPi / 180.0,
                                                   sc.theta_v3dB_deg * kPi / 180.0);
    model.lb_km = ch.lb_km;
    model.fixed_tilt = sc.downtilt.fixed_deg * kPi / 180.0;

    CsvWriter csv(out_path, cfg);
    csv.header({"x", "expected_isr", "series_sum", "gain_expectation", "v_effective",
                "shadow_ratio_mean"});
    for (double x : cfg.isr_x_values) {
        double v_eff = effective_interferer_vertical(x, model.delta_km, model.two_b,
                                                     model.params.w_v, model.fixed_tilt,
                                                     model.lb_km);
        model.gain_expectation = expected_gain_closed_form(sc.eta, v_eff, model.params.w_h);
        PlanePoint m = from_polar(x * model.delta_km, sector_azimuth(1));
        double value = expected_isr(m, model);
        double series = isr_series_approx(x, 0.5 * model.two_b, model.series).value;
        csv.row({x, value, series, model.gain_expectation, v_eff,
                 log_normal_mean(model.sigma_ratio_dB)});
    }
    write_metadata(out_path, "expected-isr", cfg);
    return 0;
}

int cmd_pattern_dump(const CommonOpts& opts) {
    RunConfig cfg = resolve_config(opts);
    std::string out_path = opts.out_path.empty() ? "pattern.csv" : opts.out_path;
    const Scenario& sc = cfg.scenario;
    PatternParams pat = PatternParams::from_beam_widths(sc.theta_h3dB_deg * kPi / 180.0,
                                                        sc.theta_v3dB_deg * kPi / 180.0);
    CsvWriter csv(out_path, cfg);
    csv.header({"angle_deg", "H", "V"});
    for (int i = -180; i <= 180; ++i) {
        double deg = 0.5 * i;
        double rad = deg * kPi / 180.0;
        csv.row({deg, pattern_value(rad, pat.w_h), pattern_value(rad, pat.w_v)});
    }
    write_metadata(out_path, "pattern-dump", cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"System-level simulator for 3D beamforming in a tri-sectorized hexagonal network"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* coverage = app.add_subcommand("coverage", "SINR coverage CCDF of one scenario");
    auto* tput = app.add_subcommand("throughput", "mean throughput over a load grid");
    auto* compare = app.add_subcommand("compare", "aligned CCDFs of the compare scenarios");
    auto* eisr = app.add_subcommand("expected-isr", "analytical expected ISR (fixed downtilt)");
    auto* pattern = app.add_subcommand("pattern-dump", "angle/gain table of the configured patterns");
    for (auto* cmd : {coverage, tput, compare, eisr, pattern}) add_common(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (coverage->parsed()) return cmd_coverage(opts);
        if (tput->parsed()) return cmd_throughput(opts);
        if (compare->parsed()) return cmd_compare(opts);
        if (eisr->parsed()) return cmd_expected_isr(opts);
        if (pattern->parsed()) return cmd_pattern_dump(opts);
    } catch (const hexbeam::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
