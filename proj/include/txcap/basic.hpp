#pragma once

#include <functional>
#include <string>

namespace txcap {

struct NetworkParams {
    int d = 2;
    double lambda = 0.0;
    double alpha = 4.0;
    double epsilon = 0.0;
    double u = 1.0;
    double P = 1.0;
    double N = 0.0;
    double tau = 1.0;

    double delta() const { return d / alpha; }
    // Received SNR P u^-alpha / N; +inf without noise.
    double snr() const;
    // Outage threshold on normalized interference: u^-alpha / tau - N / P.
    double threshold() const;
    // Dominant-interferer radius.
    double xi() const;
    void validate() const;
    NetworkParams with_lambda(double l) const;
};

enum class Regime {
    exact,
    asymptotic,
    lower_bound,
    upper_bound,
    upper_bound_markov,
    upper_bound_chebychev,
    upper_bound_chernoff,
};
std::string regime_name(Regime r);

struct OpTcPair {
    double op;
    double tc;
    Regime regime;
};

// Requires epsilon = 0 and alpha = 2d.
double op_exact_half(const NetworkParams& p);
double tc_exact_half(const NetworkParams& p, double q_star);

OpTcPair op_tc_asymptotic(const NetworkParams& p, double q_star);
OpTcPair op_lb_tc_ub(const NetworkParams& p, double q_star);

double op_ub_markov(const NetworkParams& p);
double op_ub_chebychev(const NetworkParams& p);
double op_ub_chernoff(const NetworkParams& p);
// Tail bound exponent c(lambda) with its maximizing theta.
struct ChernoffExponent {
    double c;
    double theta;
};
ChernoffExponent chernoff_exponent(const NetworkParams& p);

// TC implied by an OP curve increasing in lambda: lambda(q*) (1 - q*).
double tc_from_op(const std::function<double(double)>& op_of_lambda, double q_star, double lambda_hint = 1.0);

// Exact OP and TC for any delta with epsilon = 0, via the inverse CCDF of the
// unit 1-D shot noise (closed form at delta = 1/2, series elsewhere).
double op_general(const NetworkParams& p);
double tc_general(const NetworkParams& p, double q_star);
// y with P(Sigma > y) = q for the unit 1-D shot noise of exponent delta.
double inverse_sn_ccdf_unit(double delta, double q);

struct Throughput {
    double tp;
    double op;
    Regime regime;
};
Throughput throughput(const NetworkParams& p);

struct TpOptimum {
    double a;
    double lambda_opt;
    double tp_max;
    double op_at_opt;
};
TpOptimum tp_ub_optimum(const NetworkParams& p);

struct TcOptimum {
    double q_opt;
    double tc_max;
};
TcOptimum tc_ub_optimum(const NetworkParams& p);

struct Aloha {
    double tp;
    double op;
};
Aloha slotted_aloha(long long n, double p);
// n -> infinity with n p -> lambda.
Aloha slotted_aloha_asymptotic(double lambda);

}  // namespace txcap
