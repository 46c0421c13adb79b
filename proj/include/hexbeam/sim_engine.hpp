#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexbeam/interference.hpp"

namespace hexbeam {

enum class Mode {
    beamforming3d,
    beamforming2d,  // vertical factor held at 1
    sector_no_bf,   // 65/32-degree sector patterns at fixed azimuths, 8-degree tilt
};

enum class DowntiltKind { variable, fixed };

struct Downtilt {
    DowntiltKind kind = DowntiltKind::variable;
    double fixed_deg = 8.0;
};

struct Scenario {
    Mode mode = Mode::beamforming3d;
    double theta_h3dB_deg = 8.0;
    double theta_v3dB_deg = 8.0;
    Downtilt downtilt;
    double eta = 1.0;
    int n_rings = 5;
    long n_trials = 20000;
    std::uint64_t seed = 1;
    std::string label;
};

struct NetworkConfig {
    double delta_km = 0.75;
    ChannelParams channel = ChannelParams::defaults();
    MimoConfig mimo;
    bool serving_co_shadow_unit = true;  // shadow ratio 1 on serving co-sectors
};

// Empirical complementary CDF of the SINR.
struct CcdfCurve {
    std::vector<double> thresholds_dB;
    std::vector<double> coverage;
    std::vector<double> stderr_;  // binomial sqrt(p(1-p)/n)
    long n_trials = 0;
};

struct ScenarioStats {
    CcdfCurve curve;
    double mean_throughput_bps = 0.0;
    double stderr_throughput_bps = 0.0;
    double mean_isr = 0.0;
    double stderr_isr = 0.0;
};

struct LoadPoint {
    double eta = 0.0;
    double mean_throughput_bps = 0.0;
    double stderr_throughput_bps = 0.0;
};

// Scenario state resolved once per run: pattern set, interferer positions,
// mode overrides.
class TrialContext {
public:
    TrialContext(const NetworkConfig& net, const Scenario& sc);

    // One Monte Carlo realization: mobile, beams, shadowing, cumulative ISR,
    // SINR, throughput.
    IsrSample run_trial(RandomStream& rng) const;

    const PatternParams& pattern() const { return pattern_; }
    const NetworkConfig& network() const { return net_; }
    const Scenario& scenario() const { return scenario_; }

private:
    NetworkConfig net_;
    Scenario scenario_;
    PatternParams pattern_;
    VerticalMode vmode_ = VerticalMode::pattern;
    bool steer_at_azimuth_ = false;  // sector_no_bf: beams are the sector antennas
    bool fixed_tilt_ = false;
    double fixed_tilt_rad_ = 0.0;
    std::vector<PlanePoint> interferers_;

    BeamState draw_beam(int sector, RandomStream& rng) const;
};

IsrSample run_trial(const TrialContext& ctx, RandomStream& rng);

// Runs n_trials in fixed blocks with per-block substreams; results are
// bit-identical for any thread count. stream_salt decorrelates repeated runs
// under one master seed (load sweeps).
ScenarioStats run_scenario(const NetworkConfig& net, const Scenario& sc,
                           std::span<const double> thresholds_dB, int threads = 0,
                           std::uint64_t stream_salt = 0);

CcdfCurve coverage_curve(const NetworkConfig& net, const Scenario& sc,
                         std::span<const double> thresholds_dB, int threads = 0);

std::vector<LoadPoint> throughput_vs_load(const NetworkConfig& net, const Scenario& sc,
                                          std::span<const double> eta_grid,
                                          int threads = 0);

std::vector<ScenarioStats> compare_scenarios(const NetworkConfig& net,
                                             std::span<const Scenario> scenarios,
                                             std::span<const double> thresholds_dB,
                                             int threads = 0);

std::vector<double> default_thresholds_dB();  // -10..30 dB, 0.5 dB step
std::vector<double> default_eta_grid();       // 0.01, 0.1, 0.2, ..., 1.0

}  // namespace hexbeam
