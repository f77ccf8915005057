#pragma once

#include "txcap/basic.hpp"
#include "txcap/extensions.hpp"
#include "txcap/fading.hpp"
#include "txcap/shotnoise.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace txcap {

enum class SimModel { basic, fading, vld, ic, fts, fpc, mrc, multihop };
std::string sim_model_name(SimModel m);
SimModel sim_model_from_string(const std::string& s);

struct SimConfig {
    SimModel model = SimModel::basic;
    NetworkParams net;

    // fading / fpc
    FadeDistribution signal_fade = FadeDistribution::rayleigh();
    FadeDistribution interf_fade = FadeDistribution::rayleigh();
    FadeDistribution own_fade = FadeDistribution::rayleigh();  // fpc h_ii
    double f = 0.0;
    // vld
    LinkDistanceLaw link = LinkDistanceLaw::fixed(1.0);
    // ic
    double kappa = 1.0;
    int K = 0;
    double P_min = 1.0;
    // fts: interferers thinned from lambda_pot by F(h_hat); net.lambda is ignored
    double lambda_pot = 0.0;
    double h_hat = 0.0;
    // mrc
    int n_r = 1;
    // multihop
    MultihopParams multihop;

    long long trials = 100000;
    std::uint64_t seed = 1;
    double window_tolerance = 1e-3;
    double confidence = 0.99;
    int workers = 0;           // 0: hardware concurrency capped by TXCAP_THREADS
    int chunk_size = 1024;     // partition unit; stream id = chunk index

    void validate() const;
};

struct EmpiricalEstimate {
    double mean;
    double half_width;
    long long trials;
    long long count;
    double window_radius;
    double bias_bound;  // Campbell mean of the discarded tail, relative to the outage threshold
    std::string plan;
};

// Window radius for the configured tolerance.
double sim_window_radius(const SimConfig& cfg);

EmpiricalEstimate estimate_op(const SimConfig& cfg);
// Bisection on the model intensity; returns lambda (1 - q*).
EmpiricalEstimate estimate_tc(const SimConfig& cfg, double q_star);

// Worker count actually used for cfg.
int sim_workers(const SimConfig& cfg, long long chunks);

struct SumMaxRow {
    double y;
    double p_sum;
    double p_max;
    long long exceed_sum;
    long long exceed_max;
    double hw_sum;
    double hw_max;
    double ratio;
};
struct SumMaxResult {
    std::vector<SumMaxRow> rows;
    std::vector<double> max_samples;  // sorted, one per snapshot
    double window_radius;
    std::string plan;
};
// Empirical P(Sigma > y) / P(M > y); the window is sized for the smallest y.
SumMaxResult estimate_sum_max_ratio(const SnSpec& spec, const std::vector<double>& y_grid, long long snapshots,
                                    std::uint64_t seed, double window_tolerance = 1e-3, double confidence = 0.99,
                                    int workers = 0);

// Kolmogorov-Smirnov statistic sqrt(n) sup |F_n - F| of sorted samples.
double ks_statistic(const std::vector<double>& sorted, const std::function<double(double)>& cdf);

}  // namespace txcap
