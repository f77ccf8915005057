#pragma once

#include "txcap/basic.hpp"
#include "txcap/fading.hpp"

namespace txcap {

// ---- spectrum partitioning -------------------------------------------------

struct SpectrumParams {
    double W = 10e6;     // total bandwidth, Hz
    double R = 1e6;      // per-link rate, bit/s
    double eta = 1e-6;   // noise PSD, W/Hz
    double B = 1.0;      // band count (continuous relaxation allowed)
    NetworkParams net;   // d, alpha, u, P; lambda/tau/N are derived per band

    double delta() const { return net.delta(); }
    // Pu^-alpha / (eta R).
    double ebno() const;
    // Pu^-alpha / (eta W), the SNR when the whole band is used.
    double snr_full() const;
    double nu() const { return R * B / W; }
    void validate() const;
};

// omega(B) = B (1 / (2^{RB/W} - 1) - 1 / (snr B))^delta.
double spectrum_objective_bands(const SpectrumParams& p, double B);
// omega~(nu) = nu (1 / (2^nu - 1) - 1 / (ebno nu))^delta.
double spectrum_objective_nu(double nu, double ebno, double delta);

// Largest spectral efficiency with positive inner bracket: nu = log2(1 + ebno nu).
double max_spectral_efficiency(double ebno);
// Root of the first-order condition in (0, nu_max).
double optimal_spectral_efficiency(double ebno, double delta);
// ebno -> infinity: 1 - 2^-nu = ln2 delta nu.
double optimal_spectral_efficiency_high_snr(double delta);
// First-order expansions near ebno = ln 2.
double max_spectral_efficiency_low_snr(double ebno);
double optimal_spectral_efficiency_low_snr(double ebno, double delta);

struct SpectrumOptimum {
    double nu_star;
    double B_continuous;
    int B_star;         // 0 when no integer band count is feasible
    double kappa;       // 2 (1 - q*) / (c_d u^d y*^delta)
    double tc;          // kappa omega(B*)
    double tc_continuous;
};
SpectrumOptimum spectrum_optimum(const SpectrumParams& p, double q_star);
// TC at a given band count.
double spectrum_tc(const SpectrumParams& p, double q_star);

// ---- interference cancellation ---------------------------------------------

struct IcParams {
    NetworkParams net;
    double kappa = 1.0;
    int K = 0;
    double P_min = 1.0;

    void validate() const;
};

double ic_op_lb(const IcParams& p);

// ---- fading threshold scheduling -------------------------------------------

struct FtsParams {
    NetworkParams net;  // lambda is ignored
    double lambda_pot = 0.0;
    double h_hat = 0.0;
    FadeDistribution fade = FadeDistribution::rayleigh();

    double lambda_hat() const { return lambda_pot * fade.ccdf(h_hat); }
    void validate() const;
};

struct FtsAsymptotic {
    double op;
    double tp;
    double slope;  // op / lambda_hat
};
FtsAsymptotic fts_asymptotic(const FtsParams& p);

// b = c_d tau^delta u^d E[h^delta].
double fts_b(const FtsParams& p);

struct FtsThreshold {
    double h_hat;
    bool flagged;  // clamped to a support boundary
};
// TP-optimal threshold for N = 0.
FtsThreshold fts_optimal_threshold(const FtsParams& p);

struct FtsBound {
    double op_lb;
    double tp_ub;
};
FtsBound fts_op_lb(const FtsParams& p);

struct TpComparison {
    double no_fading;
    double fading_unscheduled;
    double fading_scheduled;
};
// Asymptotic TPs at attempted intensity lambda_hat, matched fades, N = 0.
// The FTS threshold is chosen so that lambda_pot F(h_hat) = lambda_hat.
TpComparison fts_tp_comparison(const FtsParams& p, double lambda_hat);

// ---- fractional power control ----------------------------------------------

struct FpcParams {
    NetworkParams net;
    double f = 0.0;
    FadeDistribution signal = FadeDistribution::rayleigh();      // h00
    FadeDistribution own = FadeDistribution::rayleigh();         // h11
    FadeDistribution cross = FadeDistribution::rayleigh();       // h10

    void validate() const;
};

struct FpcAsymptotic {
    double op;
    double tc;
    double q0;
    double slope;
    Regime regime;
};
// Infinite fractional moments give slope = +inf, op = 1, tc = 0.
FpcAsymptotic fpc_asymptotic(const FpcParams& p, double q_star);
double fpc_op_lb(const FpcParams& p);

struct PowerMoments {
    double mean;
    double second;
    double variance;  // +inf when f >= 1/2
};
// Rayleigh fades; mean transmit power P.
double fpc_power_moment(double P, double f, double p);
PowerMoments fpc_power_moments(double P, double f);

}  // namespace txcap
