#pragma once

#include "txcap/basic.hpp"
#include "txcap/fading.hpp"

#include <string>
#include <vector>

namespace txcap {

// ---- fading ----------------------------------------------------------------

// Rayleigh signal fade, any interferer fade; epsilon = 0.
OpTcPair op_tc_rayleigh_exact(const NetworkParams& p, const FadeDistribution& interf_fade, double q_star);

struct FadingAsymptotic {
    double op;
    double tc;
    double q0;     // outage without interferers, F_{h0}(tau / snr)
    double slope;  // c_d E[h^delta] E[(h0/(tau u^alpha) - N/P)^-delta | no bad fade]
    Regime regime;
};
FadingAsymptotic op_tc_fading_asymptotic(const NetworkParams& p, const FadeDistribution& signal_fade,
                                         const FadeDistribution& interf_fade, double q_star);

double op_lb_fading(const NetworkParams& p, const FadeDistribution& signal_fade,
                    const FadeDistribution& interf_fade);

// ---- variable link distance ------------------------------------------------

struct VldResult {
    OpTcPair asymptotic;
    double op_lb;
    double tc_ub;
    double op_exact;  // NaN unless delta = 1/2
    double penalty;   // E[u^d] / E[u]^d
};
// Uses p.lambda, p.tau, p.alpha, p.d; p.u is ignored. Needs epsilon = 0 and N = 0.
VldResult op_tc_vld(const NetworkParams& p, const LinkDistanceLaw& law, double q_star);

// ---- multihop --------------------------------------------------------------

struct MultihopParams {
    double U = 1.0;
    int M = 1;
    int A = 1;
    double lambda = 0.0;
    double alpha = 4.0;
    double tau = 1.0;
    double P = 1.0;
    double N = 0.0;

    double delta() const { return 2.0 / alpha; }
    void validate() const;
};

// pi^2 delta csc(pi delta) with delta = 2 / alpha.
double k_alpha(double alpha);
// Per-hop, per-attempt Rayleigh outage with hop length U / M.
double multihop_hop_op(const MultihopParams& mp, int M);

struct PascalStats {
    double p_done;         // P(T_M <= A)
    double mean_truncated; // E[min(T_M, A)]
};
// T_M ~ Pascal(M, q): trials to M successes with per-trial failure q.
PascalStats pascal_stats(int M, double q, int A);

struct MultihopResult {
    double exact;  // lambda max_M P(T_M <= A) / E[T_M ^ A]
    double ub;     // lambda max_M (1 - q) / M
    int m_exact;
    int m_ub;
    std::vector<double> ratio_exact;  // index M - 1
    std::vector<double> ratio_ub;
};
MultihopResult multihop_tc(const MultihopParams& mp);

struct HopChoice {
    double root;       // continuous stationary point
    int m_star;        // integer choice in [1, A]
    std::string method;
    bool flagged;      // no positive root, M* forced to 1
};
// Largest positive root of M^alpha - 2 k2 M^(alpha-2) - alpha k1 = 0.
double optimal_hops_root_numeric(const MultihopParams& mp);
double optimal_hops_closed_form3(const MultihopParams& mp);
double optimal_hops_closed_form4(const MultihopParams& mp);
HopChoice optimal_hops(const MultihopParams& mp);

}  // namespace txcap
