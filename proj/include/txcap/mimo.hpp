#pragma once

#include "txcap/basic.hpp"

#include <string>

namespace txcap {

// Formulas here assume d = 2 and use delta = 2 / alpha. All are asymptotic
// (small lambda or q*, and usually high SNR); results carry a regime tag.

struct AntennaConfig {
    int n_t = 1;
    int n_r = 1;
    int K = 1;       // streams
    double z = 0.0;  // cancelled interferers (PZF)

    void validate() const;
};

// pi^2 delta csc(pi delta).
double c_alpha(double alpha);
// 1 + sum_{k=1}^{n-1} (1/k!) prod_{l<k} (l - delta).
double mrc_factor(int n_r, double delta);

double mrc_op(const NetworkParams& p, const AntennaConfig& cfg);

struct MrcTc {
    double tc;
    double normalized;  // C_alpha tau^delta u^2 tc / (n_r^delta q*)
    bool lb_holds;      // normalized >= 1
    bool ub_holds;      // normalized <= Gamma(1 - delta)
    Regime regime;
};
MrcTc mrc_tc(const NetworkParams& p, const AntennaConfig& cfg, double q_star);

struct IntensityBounds {
    double lb;
    double ub;
    Regime regime;
};
// Optimal contention density of n_t x n_r eigenbeamforming.
IntensityBounds eigenbf_ocd_bounds(const NetworkParams& p, const AntennaConfig& cfg, double q_star);

struct PzfBounds {
    double op_ub;       // NaN outside ceil(alpha/2) < z < n_r - 1
    double tc_lb;       // NaN outside its feasible z-range
    double tc_ub;
    double theta_star;  // 1 - 2 / alpha
    int z_star;         // theta* n_r rounded by comparing tc_lb at floor and ceiling
    bool op_ub_feasible;
    bool tc_lb_feasible;
    Regime regime;
};
PzfBounds pzf_bounds(const NetworkParams& p, const AntennaConfig& cfg, double q_star, int l = 2);

double mmse_tc_ub(const NetworkParams& p, int n_r, double q_star);
// Closed forms for z = 0 and z = n_r - 1, both with l = 2.
double mrc_tc_ub(const NetworkParams& p, int n_r, double q_star);
double zf_tc_ub(const NetworkParams& p, int n_r, double q_star);

enum class SmReceiver { mrc, zf, blast_d };
SmReceiver sm_receiver_from_string(const std::string& s);

struct StreamChoice {
    double raw;
    int rounded;  // nearest integer clamped to [1, n_t]
    Regime regime;
};
StreamChoice sm_optimal_streams(const NetworkParams& p, const AntennaConfig& cfg, SmReceiver rx);
// TC(V-BLAST) / TC(D-BLAST).
double vblast_dblast_ratio(double alpha);

struct SdmaCluster {
    double u_min = 1.0;
    double u_max = 1.0;

    void validate() const;
};

// [sum_{j=0}^{d} C(d,j) (-1)^{j+1} j^delta]^-1, evaluated through
// delta / Gamma(1 - delta) int_0^inf (1 - e^-t)^d t^{-delta-1} dt.
double sdma_f(int d, double delta);
// Same sum by direct alternating summation in long double (reference only).
double sdma_f_direct(int d, double delta);
// Interference constant for chi^2_{2K} marks: pi Gamma(1 - delta) Gamma(K + delta) / Gamma(K).
double sdma_j(int K, double delta);
// The alternative printed finite-sum form of the same constant.
double sdma_j_sum(int K, double alpha);

struct SdmaBounds {
    double lb;
    double ub;
    double k_star_lb;
    double k_star_ub;
    double k_star_miso;
    int diversity;
    Regime regime;
};
SdmaBounds sdma_dpc_tc_bounds(const NetworkParams& p, const SdmaCluster& cluster, const AntennaConfig& cfg,
                              double q_star);

}  // namespace txcap
