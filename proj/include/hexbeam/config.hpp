#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexbeam/sim_engine.hpp"

namespace hexbeam {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Full run description; defaults mirror the reference scenario (0.75 km
// inter-site distance, 30 m masts, 40 dBm, 20 MHz, 17 dBi, -93 dBm noise,
// exponent 3.5, 130 dB, 5.5 dB shadowing, 5 rings, 2 Rx antennas).
struct RunConfig {
    NetworkConfig net;
    Scenario scenario;
    std::vector<Scenario> compare;     // scenarios of the compare subcommand
    std::vector<double> thresholds_dB; // CCDF grid
    std::vector<double> eta_grid;      // load sweep grid
    std::vector<double> isr_x_values;  // expected-isr evaluation points
    int threads = 0;                   // 0 -> hardware concurrency
};

RunConfig default_run_config();

// Parse + validate a JSON document; unknown keys rejected, out-of-range
// values reported with the offending field named.
RunConfig parse_config(const std::string& json_text);

RunConfig load_config(const std::string& path);

// Canonical JSON serialization (round-trips through parse_config).
std::string emit_config(const RunConfig& cfg);

// FNV-1a over the canonical serialization; runtime-only knobs (threads) are
// excluded so reruns hash identically.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace hexbeam
