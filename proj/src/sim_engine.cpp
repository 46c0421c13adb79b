#include "hexbeam/sim_engine.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hexbeam/stochastic.hpp"

namespace hexbeam {

namespace {

constexpr long kBlockSize = 1024;

double deg2rad(double d) { return d * kPi / 180.0; }

}  // namespace

TrialContext::TrialContext(const NetworkConfig& net, const Scenario& sc)
    : net_(net), scenario_(sc) {
    if (!(sc.eta >= 0.0) || !(sc.eta <= 1.0))
        throw std::invalid_argument("TrialContext: eta must be in [0, 1]");
    if (sc.n_rings < 1) throw std::invalid_argument("TrialContext: n_rings must be >= 1");
    if (sc.n_trials < 1) throw std::invalid_argument("TrialContext: n_trials must be >= 1");

    switch (sc.mode) {
        case Mode::sector_no_bf:
            // fixed sector antennas: 65/32-degree patterns, 8-degree tilt
            pattern_ = PatternParams::from_beam_widths(deg2rad(65.0), deg2rad(32.0));
            steer_at_azimuth_ = true;
            fixed_tilt_ = true;
            fixed_tilt_rad_ = deg2rad(8.0);
            break;
        case Mode::beamforming2d:
            pattern_ = PatternParams::from_beam_widths(deg2rad(sc.theta_h3dB_deg),
                                                       deg2rad(sc.theta_v3dB_deg));
            vmode_ = VerticalMode::unity;
            break;
        case Mode::beamforming3d:
            pattern_ = PatternParams::from_beam_widths(deg2rad(sc.theta_h3dB_deg),
                                                       deg2rad(sc.theta_v3dB_deg));
            if (sc.downtilt.kind == DowntiltKind::fixed) {
                fixed_tilt_ = true;
                fixed_tilt_rad_ = deg2rad(sc.downtilt.fixed_deg);
            }
            break;
    }
    for (const auto& [coord, pos] : ring_sites(sc.n_rings, net.delta_km))
        interferers_.push_back(pos);
}

BeamState TrialContext::draw_beam(int sector, RandomStream& rng) const {
    BeamState b = sample_beam(sector, net_.delta_km, net_.channel.lb_km, scenario_.eta, rng);
    if (steer_at_azimuth_) b.target_theta = sector_azimuth(sector);
    if (fixed_tilt_) b.tilt = fixed_tilt_rad_;
    return b;
}

IsrSample TrialContext::run_trial(RandomStream& rng) const {
    const ChannelParams& ch = net_.channel;
    PlanePoint m = sample_serving_mobile(net_.delta_km, rng);
    double chi0 = sample_shadowing(ch.sigma_dB, rng);

    std::vector<SiteRealization> sites;
    sites.reserve(interferers_.size() + 1);

    // Serving site: the sector-1 beam is steered exactly at the mobile in
    // every mode (the mode only changes interferer radiation), so its term is
    // 1 and the cumulative-ISR subtraction removes exactly the useful signal.
    SiteRealization serving;
    serving.pos = {0.0, 0.0};
    serving.shadow_ratio = 1.0;
    double r = magnitude(m);
    BeamState serve;
    serve.occupied = true;
    serve.target_theta = bearing(m, serving.pos);
    serve.target_r_km = r;
    serve.tilt = tilt_for_target(r, ch.lb_km);
    serving.beams[0] = serve;
    serving.beams[1] = draw_beam(2, rng);
    serving.beams[2] = draw_beam(3, rng);
    if (net_.serving_co_shadow_unit) {
        sites.push_back(serving);
    } else {
        // optional independent shadowing ratio on the co-sectors; the serving
        // beam itself keeps ratio 1 so the normalization still removes it
        SiteRealization co = serving;
        co.beams[0] = BeamState{};
        co.shadow_ratio = sample_shadowing(ch.sigma_ratio_dB, rng);
        serving.beams[1] = BeamState{};
        serving.beams[2] = BeamState{};
        sites.push_back(serving);
        sites.push_back(co);
    }

    for (const PlanePoint& pos : interferers_) {
        SiteRealization site;
        site.pos = pos;
        site.shadow_ratio = sample_shadowing(ch.sigma_ratio_dB, rng);
        site.beams[0] = draw_beam(1, rng);
        site.beams[1] = draw_beam(2, rng);
        site.beams[2] = draw_beam(3, rng);
        sites.push_back(site);
    }

    IsrSample out;
    out.isr = isr_cumulative(m, sites, pattern_, ch.lb_km, ch.two_b, vmode_);
    double g0 = beam_gain(m, serving.pos, serving.beams[0], pattern_, ch.lb_km, vmode_);
    out.noise_term = noise_term_y0(m, chi0 * g0, ch);
    out.sinr = 1.0 / (out.isr + out.noise_term);
    out.throughput_bps = throughput(out.sinr, net_.mimo);
    return out;
}

IsrSample run_trial(const TrialContext& ctx, RandomStream& rng) {
    return ctx.run_trial(rng);
}

namespace {

struct BlockAggregate {
    std::vector<std::uint32_t> cov_counts;
    double sum_tp = 0.0, sum_tp2 = 0.0;
    double sum_isr = 0.0, sum_isr2 = 0.0;
    long n = 0;
};

}  // namespace

ScenarioStats run_scenario(const NetworkConfig& net, const Scenario& sc,
                           std::span<const double> thresholds_dB, int threads,
                           std::uint64_t stream_salt) {
    TrialContext ctx(net, sc);
    long n_trials = sc.n_trials;
    long n_blocks = (n_trials + kBlockSize - 1) / kBlockSize;
    std::vector<BlockAggregate> blocks(n_blocks);
    std::uint64_t master = splitmix64(sc.seed ^ splitmix64(stream_salt + 1));

    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    threads = static_cast<int>(std::min<long>(threads, n_blocks));

    std::atomic<long> next_block{0};
    auto worker = [&]() {
        for (;;) {
            long bi = next_block.fetch_add(1);
            if (bi >= n_blocks) return;
            BlockAggregate& agg = blocks[bi];
            agg.cov_counts.assign(thresholds_dB.size(), 0);
            long lo = bi * kBlockSize;
            long hi = std::min(n_trials, lo + kBlockSize);
            RandomStream rng(master, static_cast<std::uint64_t>(bi));
            for (long t = lo; t < hi; ++t) {
                IsrSample s = ctx.run_trial(rng);
                double sinr_db = 10.0 * std::log10(s.sinr);
                for (std::size_t i = 0; i < thresholds_dB.size(); ++i)
                    if (sinr_db > thresholds_dB[i]) ++agg.cov_counts[i];
                agg.sum_tp += s.throughput_bps;
                agg.sum_tp2 += s.throughput_bps * s.throughput_bps;
                agg.sum_isr += s.isr;
                agg.sum_isr2 += s.isr * s.isr;
                ++agg.n;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Sequential reduction in block order keeps sums bit-identical for any
    // thread count.
    ScenarioStats stats;
    stats.curve.thresholds_dB.assign(thresholds_dB.begin(), thresholds_dB.end());
    std::vector<std::uint64_t> counts(thresholds_dB.size(), 0);
    double sum_tp = 0.0, sum_tp2 = 0.0, sum_isr = 0.0, sum_isr2 = 0.0;
    for (const BlockAggregate& agg : blocks) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += agg.cov_counts[i];
        sum_tp += agg.sum_tp;
        sum_tp2 += agg.sum_tp2;
        sum_isr += agg.sum_isr;
        sum_isr2 += agg.sum_isr2;
    }
    double n = static_cast<double>(n_trials);
    stats.curve.n_trials = n_trials;
    stats.curve.coverage.resize(counts.size());
    stats.curve.stderr_.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double p = static_cast<double>(counts[i]) / n;
        stats.curve.coverage[i] = p;
        stats.curve.stderr_[i] = std::sqrt(p * (1.0 - p) / n);
    }
    stats.mean_throughput_bps = sum_tp / n;
    stats.mean_isr = sum_isr / n;
    if (n_trials > 1) {
        double var_tp = (sum_tp2 - sum_tp * sum_tp / n) / (n - 1.0);
        double var_isr = (sum_isr2 - sum_isr * sum_isr / n) / (n - 1.0);
        stats.stderr_throughput_bps = std::sqrt(std::max(var_tp, 0.0) / n);
        stats.stderr_isr = std::sqrt(std::max(var_isr, 0.0) / n);
    }
    return stats;
}

CcdfCurve coverage_curve(const NetworkConfig& net, const Scenario& sc,
                         std::span<const double> thresholds_dB, int threads) {
    return run_scenario(net, sc, thresholds_dB, threads).curve;
}

std::vector<LoadPoint> throughput_vs_load(const NetworkConfig& net, const Scenario& sc,
                                          std::span<const double> eta_grid, int threads) {
    std::vector<LoadPoint> out;
    out.reserve(eta_grid.size());
    std::vector<double> no_thresholds;
    for (std::size_t i = 0; i < eta_grid.size(); ++i) {
        Scenario point = sc;
        point.eta = eta_grid[i];
        ScenarioStats stats = run_scenario(net, point, no_thresholds, threads,
                                           static_cast<std::uint64_t>(i) + 1);
        out.push_back({eta_grid[i], stats.mean_throughput_bps, stats.stderr_throughput_bps});
    }
    return out;
}

std::vector<ScenarioStats> compare_scenarios(const NetworkConfig& net,
                                             std::span<const Scenario> scenarios,
                                             std::span<const double> thresholds_dB,
                                             int threads) {
    if (scenarios.size() < 2)
        throw std::invalid_argument("compare_scenarios: need at least two scenarios");
    std::vector<ScenarioStats> out;
    out.reserve(scenarios.size());
    for (const Scenario& sc : scenarios)
        out.push_back(run_scenario(net, sc, thresholds_dB, threads));
    return out;
}

std::vector<double> default_thresholds_dB() {
    std::vector<double> t;
    for (int i = -20; i <= 60; ++i) t.push_back(0.5 * i);
    return t;
}

std::vector<double> default_eta_grid() {
    std::vector<double> g{0.01};
    for (int i = 1; i <= 10; ++i) g.push_back(0.1 * i);
    return g;
}

}  // namespace hexbeam
