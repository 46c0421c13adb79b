#include "hexbeam/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hexbeam {

using nlohmann::json;

namespace {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::beamforming3d: return "beamforming3d";
        case Mode::beamforming2d: return "beamforming2d";
        case Mode::sector_no_bf: return "sector_no_bf";
    }
    return "beamforming3d";
}

Mode parse_mode(const std::string& s, const std::string& field) {
    if (s == "beamforming3d") return Mode::beamforming3d;
    if (s == "beamforming2d") return Mode::beamforming2d;
    if (s == "sector_no_bf") return Mode::sector_no_bf;
    throw ConfigError(field, "unknown mode '" + s + "'");
}

double get_number(const json& j, const std::string& field, double fallback) {
    if (!j.contains(field)) return fallback;
    if (!j[field].is_number()) throw ConfigError(field, "expected a number");
    return j[field].get<double>();
}

long get_integer(const json& j, const std::string& field, long fallback) {
    if (!j.contains(field)) return fallback;
    if (!j[field].is_number_integer()) throw ConfigError(field, "expected an integer");
    return j[field].get<long>();
}

void check_known_keys(const json& j, std::initializer_list<const char*> known,
                      const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError(where.empty() ? it.key() : where + "." + it.key(),
                                   "unknown field");
    }
}

Scenario parse_scenario(const json& j, const Scenario& base, const std::string& where) {
    check_known_keys(j,
                     {"mode", "theta_h3dB_deg", "theta_v3dB_deg", "downtilt_mode",
                      "downtilt_fixed_deg", "eta", "n_rings", "n_trials", "seed", "label"},
                     where);
    Scenario sc = base;
    if (j.contains("mode")) sc.mode = parse_mode(j["mode"].get<std::string>(), where + ".mode");
    sc.theta_h3dB_deg = get_number(j, "theta_h3dB_deg", sc.theta_h3dB_deg);
    sc.theta_v3dB_deg = get_number(j, "theta_v3dB_deg", sc.theta_v3dB_deg);
    if (j.contains("downtilt_mode")) {
        std::string k = j["downtilt_mode"].get<std::string>();
        if (k == "variable")
            sc.downtilt.kind = DowntiltKind::variable;
        else if (k == "fixed")
            sc.downtilt.kind = DowntiltKind::fixed;
        else
            throw ConfigError(where + ".downtilt_mode", "expected 'variable' or 'fixed'");
    }
    sc.downtilt.fixed_deg = get_number(j, "downtilt_fixed_deg", sc.downtilt.fixed_deg);
    sc.eta = get_number(j, "eta", sc.eta);
    sc.n_rings = static_cast<int>(get_integer(j, "n_rings", sc.n_rings));
    sc.n_trials = get_integer(j, "n_trials", sc.n_trials);
    sc.seed = static_cast<std::uint64_t>(get_integer(j, "seed", static_cast<long>(sc.seed)));
    if (j.contains("label")) sc.label = j["label"].get<std::string>();

    if (sc.eta < 0.0 || sc.eta > 1.0) throw ConfigError(where + ".eta", "must be in [0, 1]");
    if (sc.theta_h3dB_deg <= 0.0 || sc.theta_h3dB_deg >= 180.0)
        throw ConfigError(where + ".theta_h3dB_deg", "must be in (0, 180)");
    if (sc.theta_v3dB_deg <= 0.0 || sc.theta_v3dB_deg >= 180.0)
        throw ConfigError(where + ".theta_v3dB_deg", "must be in (0, 180)");
    if (sc.downtilt.fixed_deg <= 0.0 || sc.downtilt.fixed_deg > 90.0)
        throw ConfigError(where + ".downtilt_fixed_deg", "must be in (0, 90]");
    if (sc.n_rings < 1) throw ConfigError(where + ".n_rings", "must be >= 1");
    if (sc.n_trials < 1) throw ConfigError(where + ".n_trials", "must be >= 1");
    return sc;
}

json emit_scenario(const Scenario& sc) {
    json j;
    j["mode"] = mode_name(sc.mode);
    j["theta_h3dB_deg"] = sc.theta_h3dB_deg;
    j["theta_v3dB_deg"] = sc.theta_v3dB_deg;
    j["downtilt_mode"] = sc.downtilt.kind == DowntiltKind::variable ? "variable" : "fixed";
    j["downtilt_fixed_deg"] = sc.downtilt.fixed_deg;
    j["eta"] = sc.eta;
    j["n_rings"] = sc.n_rings;
    j["n_trials"] = sc.n_trials;
    j["seed"] = sc.seed;
    j["label"] = sc.label;
    return j;
}

}  // namespace

RunConfig default_run_config() {
    RunConfig cfg;
    cfg.net.channel.finalize();
    cfg.thresholds_dB = default_thresholds_dB();
    cfg.eta_grid = default_eta_grid();
    cfg.isr_x_values = {0.3};
    return cfg;
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("<document>", "expected a JSON object");
    check_known_keys(j,
                     {"delta_km", "bs_height_m", "power_dBm", "antenna_gain_dBi",
                      "noise_dBm", "bandwidth_hz", "path_exp_2b", "propagation_a_dB",
                      "sigma_dB", "sigma_ratio_dB", "tx", "rx",
                      "serving_co_shadow_unit", "scenario", "compare", "thresholds_dB",
                      "eta_grid", "isr_x_values", "threads"},
                     "");

    RunConfig cfg = default_run_config();
    ChannelParams& ch = cfg.net.channel;
    cfg.net.delta_km = get_number(j, "delta_km", cfg.net.delta_km);
    ch.bs_height_m = get_number(j, "bs_height_m", ch.bs_height_m);
    ch.power_dBm = get_number(j, "power_dBm", ch.power_dBm);
    ch.antenna_gain_dBi = get_number(j, "antenna_gain_dBi", ch.antenna_gain_dBi);
    ch.noise_dBm = get_number(j, "noise_dBm", ch.noise_dBm);
    cfg.net.mimo.bandwidth_hz = get_number(j, "bandwidth_hz", cfg.net.mimo.bandwidth_hz);
    ch.two_b = get_number(j, "path_exp_2b", ch.two_b);
    ch.a_dB = get_number(j, "propagation_a_dB", ch.a_dB);
    ch.sigma_dB = get_number(j, "sigma_dB", ch.sigma_dB);
    ch.sigma_ratio_dB = get_number(j, "sigma_ratio_dB", -1.0);
    cfg.net.mimo.tx = static_cast<int>(get_integer(j, "tx", cfg.net.mimo.tx));
    cfg.net.mimo.rx = static_cast<int>(get_integer(j, "rx", cfg.net.mimo.rx));
    if (j.contains("serving_co_shadow_unit"))
        cfg.net.serving_co_shadow_unit = j["serving_co_shadow_unit"].get<bool>();
    cfg.threads = static_cast<int>(get_integer(j, "threads", cfg.threads));

    if (cfg.net.delta_km <= 0.0) throw ConfigError("delta_km", "must be positive");
    if (ch.bs_height_m <= 0.0) throw ConfigError("bs_height_m", "must be positive");
    if (ch.two_b <= 2.0) throw ConfigError("path_exp_2b", "must exceed 2");
    if (ch.sigma_dB < 0.0) throw ConfigError("sigma_dB", "must be >= 0");
    if (cfg.net.mimo.bandwidth_hz <= 0.0) throw ConfigError("bandwidth_hz", "must be positive");
    if (cfg.net.mimo.tx < 1) throw ConfigError("tx", "must be >= 1");
    if (cfg.net.mimo.rx < 1) throw ConfigError("rx", "must be >= 1");
    ch.finalize();

    if (j.contains("scenario"))
        cfg.scenario = parse_scenario(j["scenario"], cfg.scenario, "scenario");
    if (j.contains("compare")) {
        if (!j["compare"].is_array()) throw ConfigError("compare", "expected an array");
        cfg.compare.clear();
        int idx = 0;
        for (const json& s : j["compare"]) {
            cfg.compare.push_back(
                parse_scenario(s, cfg.scenario, "compare[" + std::to_string(idx) + "]"));
            ++idx;
        }
    }
    if (j.contains("thresholds_dB")) {
        cfg.thresholds_dB = j["thresholds_dB"].get<std::vector<double>>();
        if (cfg.thresholds_dB.empty()) throw ConfigError("thresholds_dB", "must not be empty");
    }
    if (j.contains("eta_grid")) {
        cfg.eta_grid = j["eta_grid"].get<std::vector<double>>();
        for (double e : cfg.eta_grid)
            if (e < 0.0 || e > 1.0) throw ConfigError("eta_grid", "values must be in [0, 1]");
    }
    if (j.contains("isr_x_values")) {
        cfg.isr_x_values = j["isr_x_values"].get<std::vector<double>>();
        for (double x : cfg.isr_x_values)
            if (x <= 0.0 || x >= 1.0) throw ConfigError("isr_x_values", "values must be in (0, 1)");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<path>", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string emit_config(const RunConfig& cfg) {
    json j;
    j["delta_km"] = cfg.net.delta_km;
    j["bs_height_m"] = cfg.net.channel.bs_height_m;
    j["power_dBm"] = cfg.net.channel.power_dBm;
    j["antenna_gain_dBi"] = cfg.net.channel.antenna_gain_dBi;
    j["noise_dBm"] = cfg.net.channel.noise_dBm;
    j["bandwidth_hz"] = cfg.net.mimo.bandwidth_hz;
    j["path_exp_2b"] = cfg.net.channel.two_b;
    j["propagation_a_dB"] = cfg.net.channel.a_dB;
    j["sigma_dB"] = cfg.net.channel.sigma_dB;
    j["sigma_ratio_dB"] = cfg.net.channel.sigma_ratio_dB;
    j["tx"] = cfg.net.mimo.tx;
    j["rx"] = cfg.net.mimo.rx;
    j["serving_co_shadow_unit"] = cfg.net.serving_co_shadow_unit;
    j["scenario"] = emit_scenario(cfg.scenario);
    json cmp = json::array();
    for (const Scenario& sc : cfg.compare) cmp.push_back(emit_scenario(sc));
    j["compare"] = cmp;
    j["thresholds_dB"] = cfg.thresholds_dB;
    j["eta_grid"] = cfg.eta_grid;
    j["isr_x_values"] = cfg.isr_x_values;
    j["threads"] = cfg.threads;
    return j.dump(2);
}

std::uint64_t config_hash(const RunConfig& cfg) {
    RunConfig canon = cfg;
    canon.threads = 0;
    std::string text = emit_config(canon);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace hexbeam
