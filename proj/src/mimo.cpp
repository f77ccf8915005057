#include "txcap/mimo.hpp"

#include "txcap/numeric.hpp"
#include "txcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace txcap {

namespace {

const double nan = std::numeric_limits<double>::quiet_NaN();

void check_q(double q_star) {
    if (!(q_star > 0 && q_star < 1)) throw std::invalid_argument("target outage q* must lie in (0, 1)");
}

void require_plane(const NetworkParams& p) {
    if (p.d != 2) throw std::invalid_argument("MIMO formulas are stated for d = 2");
    if (!(p.alpha > 2)) throw std::invalid_argument("alpha must exceed d");
    if (!(p.u > 0) || !(p.tau > 0) || !(p.P > 0) || !(p.N >= 0))
        throw std::invalid_argument("u, tau, P must be positive and N nonnegative");
}

// pi u^2 tau^delta (1 - q*)^delta.
double ub_denominator(const NetworkParams& p, double q_star) {
    const double delta = 2.0 / p.alpha;
    return pi * p.u * p.u * std::pow(p.tau, delta) * std::pow(1.0 - q_star, delta);
}

}  // namespace

void AntennaConfig::validate() const {
    if (n_t < 1 || n_r < 1) throw std::invalid_argument("antenna counts must be at least 1");
    if (K < 1 || K > n_t) throw std::invalid_argument("stream count K must lie in [1, n_t]");
    if (!(z >= 0 && z <= n_r - 1)) throw std::invalid_argument("cancelled count z must lie in [0, n_r - 1]");
}

double c_alpha(double alpha) {
    if (!(alpha > 2)) throw std::invalid_argument("alpha must exceed 2");
    const double delta = 2.0 / alpha;
    return pi * pi * delta / std::sin(pi * delta);
}

double mrc_factor(int n_r, double delta) {
    if (n_r < 1) throw std::invalid_argument("n_r must be at least 1");
    double sum = 1.0, term = 1.0;
    for (int k = 1; k < n_r; ++k) {
        term *= (k - 1 - delta) / k;
        sum += term;
    }
    return sum;
}

double mrc_op(const NetworkParams& p, const AntennaConfig& cfg) {
    require_plane(p);
    cfg.validate();
    const double delta = 2.0 / p.alpha;
    return p.lambda * std::pow(p.tau, delta) * p.u * p.u * c_alpha(p.alpha) * mrc_factor(cfg.n_r, delta);
}

MrcTc mrc_tc(const NetworkParams& p, const AntennaConfig& cfg, double q_star) {
    require_plane(p);
    cfg.validate();
    check_q(q_star);
    const double delta = 2.0 / p.alpha;
    const double base = c_alpha(p.alpha) * std::pow(p.tau, delta) * p.u * p.u;
    const double tc = q_star / (base * mrc_factor(cfg.n_r, delta));
    const double norm = base * tc / (std::pow(cfg.n_r, delta) * q_star);
    // Tiny slack for rounding at n_r = 1 where the lower bound is attained.
    const double slack = 1e-12;
    return {tc, norm, norm >= 1.0 - slack, norm <= gamma_fn(1.0 - delta) + slack, Regime::asymptotic};
}

IntensityBounds eigenbf_ocd_bounds(const NetworkParams& p, const AntennaConfig& cfg, double q_star) {
    require_plane(p);
    cfg.validate();
    check_q(q_star);
    const double delta = 2.0 / p.alpha;
    const double den = c_alpha(p.alpha) * p.u * p.u * std::pow(p.tau, delta);
    const double lb = std::pow(std::max(cfg.n_t, cfg.n_r), delta) * q_star / den;
    const double ub = gamma_fn(1.0 - delta) * std::pow(double(cfg.n_t) * cfg.n_r, delta) * q_star / den;
    return {lb, ub, Regime::asymptotic};
}

namespace {

double pzf_tc_lb_raw(const NetworkParams& p, int n_r, double z, double q_star) {
    const double delta = 2.0 / p.alpha;
    const double c = std::ceil(p.alpha / 2.0);
    const double noise = p.N > 0 ? p.tau / (q_star * p.snr()) : 0.0;
    const double room = n_r - z - 1.0 - noise;
    if (!(z > c) || !(room > 0)) return nan;
    return std::pow(q_star / p.tau, delta) * std::pow(p.alpha / 2.0 - 1.0, delta) / (pi * p.u * p.u) *
           std::pow(room, delta) * std::pow(z - c, 1.0 - delta);
}

}  // namespace

PzfBounds pzf_bounds(const NetworkParams& p, const AntennaConfig& cfg, double q_star, int l) {
    require_plane(p);
    cfg.validate();
    check_q(q_star);
    if (l < 2) throw std::invalid_argument("uncancelled count l must be at least 2");
    const double delta = 2.0 / p.alpha;
    const double a2 = p.alpha / 2.0;
    const double c = std::ceil(a2);
    PzfBounds out{};
    out.regime = Regime::asymptotic;
    out.theta_star = 1.0 - 2.0 / p.alpha;

    out.op_ub_feasible = cfg.z > c && cfg.z < cfg.n_r - 1;
    if (out.op_ub_feasible) {
        const double inv_snr = p.N > 0 ? 1.0 / p.snr() : 0.0;
        const double interf = std::pow(pi * p.u * p.u * p.lambda, a2) / (a2 - 1.0) * std::pow(cfg.z - c, 1.0 - a2);
        out.op_ub = p.tau * (interf + inv_snr) / (cfg.n_r - cfg.z - 1.0);
    } else {
        out.op_ub = nan;
    }

    out.tc_lb = pzf_tc_lb_raw(p, cfg.n_r, cfg.z, q_star);
    out.tc_lb_feasible = !std::isnan(out.tc_lb);
    out.tc_ub = (cfg.z + l + a2) / ub_denominator(p, q_star) * std::pow((cfg.n_r - cfg.z) / (l - 1.0), delta);

    // Integer z* near theta* n_r, scored by the TC lower bound.
    const double zc = out.theta_star * cfg.n_r;
    const int lo = static_cast<int>(std::floor(zc)), hi = lo + 1;
    const double s_lo = pzf_tc_lb_raw(p, cfg.n_r, lo, q_star), s_hi = pzf_tc_lb_raw(p, cfg.n_r, hi, q_star);
    if (std::isnan(s_lo) && std::isnan(s_hi))
        out.z_star = std::clamp(static_cast<int>(std::lround(zc)), 0, cfg.n_r - 1);
    else if (std::isnan(s_lo) || (!std::isnan(s_hi) && s_hi > s_lo))
        out.z_star = hi;
    else
        out.z_star = lo;
    return out;
}

double mmse_tc_ub(const NetworkParams& p, int n_r, double q_star) {
    require_plane(p);
    check_q(q_star);
    if (n_r < 1) throw std::invalid_argument("n_r must be at least 1");
    return (2.0 * n_r + 1.0 + p.alpha / 2.0) / ub_denominator(p, q_star);
}

double mrc_tc_ub(const NetworkParams& p, int n_r, double q_star) {
    require_plane(p);
    check_q(q_star);
    if (n_r < 1) throw std::invalid_argument("n_r must be at least 1");
    return (2.0 + p.alpha / 2.0) / ub_denominator(p, q_star) * std::pow(n_r, 2.0 / p.alpha);
}

double zf_tc_ub(const NetworkParams& p, int n_r, double q_star) {
    require_plane(p);
    check_q(q_star);
    if (n_r < 1) throw std::invalid_argument("n_r must be at least 1");
    return (2.0 + p.alpha / (2.0 * n_r)) / ub_denominator(p, q_star) * std::pow(n_r, 1.0 - 2.0 / p.alpha);
}

SmReceiver sm_receiver_from_string(const std::string& s) {
    if (s == "mrc") return SmReceiver::mrc;
    if (s == "zf") return SmReceiver::zf;
    if (s == "blast_d" || s == "dblast") return SmReceiver::blast_d;
    throw std::invalid_argument("unknown receiver '" + s + "' (expected mrc, zf or blast_d)");
}

StreamChoice sm_optimal_streams(const NetworkParams& p, const AntennaConfig& cfg, SmReceiver rx) {
    require_plane(p);
    cfg.validate();
    const double frac = 1.0 - 2.0 / p.alpha;
    const double inv_snr = p.N > 0 ? 1.0 / p.snr() : 0.0;
    double raw = 0.0;
    switch (rx) {
        case SmReceiver::mrc: raw = cfg.n_r * frac / (p.tau * (1.0 + inv_snr)); break;
        case SmReceiver::zf: raw = cfg.n_r * frac / (1.0 + p.tau * inv_snr); break;
        case SmReceiver::blast_d: raw = 2.0 * (cfg.n_t + 1.0) * frac; break;
    }
    const int rounded = std::clamp(static_cast<int>(std::lround(raw)), 1, cfg.n_t);
    return {raw, rounded, Regime::asymptotic};
}

double vblast_dblast_ratio(double alpha) {
    if (!(alpha > 2)) throw std::invalid_argument("alpha must exceed 2");
    const double delta = 2.0 / alpha;
    if (alpha <= 4) return std::pow(2.0, 1.0 - delta);
    return std::pow(2.0, -delta) * std::pow(delta, -delta) * std::pow(1.0 - delta, delta - 1.0);
}

void SdmaCluster::validate() const {
    if (!(u_min > 0 && u_min <= u_max)) throw std::invalid_argument("cluster radii must satisfy 0 < u_min <= u_max");
}

double sdma_f(int d, double delta) {
    if (d < 1) throw std::invalid_argument("diversity order must be at least 1");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
    auto g = [d, delta](double t) { return std::exp(d * std::log(-std::expm1(-t)) - (delta + 1.0) * std::log(t)); };
    const double knee = std::max(2.0, std::log(double(d)) + 10.0);
    const double s = num::integrate_singular(g, 0.0, 1.0) + num::integrate(g, 1.0, knee) + num::integrate_to_inf(g, knee);
    return gamma_fn(1.0 - delta) / (delta * s);
}

double sdma_f_direct(int d, double delta) {
    long double sum = 0.0L, comp = 0.0L, binom = 1.0L;
    for (int j = 1; j <= d; ++j) {
        binom = binom * (d - j + 1) / j;
        const long double term = ((j % 2) ? 1.0L : -1.0L) * binom * std::pow(static_cast<long double>(j), delta);
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return static_cast<double>(1.0L / sum);
}

double sdma_j(int K, double delta) {
    if (K < 1) throw std::invalid_argument("stream count must be at least 1");
    return pi * gamma_fn(1.0 - delta) * std::exp(log_gamma(K + delta) - log_gamma(K));
}

double sdma_j_sum(int K, double alpha) {
    if (K < 1) throw std::invalid_argument("stream count must be at least 1");
    const double delta = 2.0 / alpha;
    double sum = 0.0;
    for (int m = 0; m < K; ++m) {
        const double lb = log_gamma(K + 1.0) - log_gamma(m + 1.0) - log_gamma(K - m + 1.0);
        sum += std::exp(lb + log_gamma(m + 1.0)) * gamma_fn(K - m - delta);
    }
    return 2.0 * pi * gamma_fn(delta) / (alpha * gamma_fn(K)) * sum;
}

SdmaBounds sdma_dpc_tc_bounds(const NetworkParams& p, const SdmaCluster& cluster, const AntennaConfig& cfg,
                              double q_star) {
    require_plane(p);
    cluster.validate();
    cfg.validate();
    check_q(q_star);
    if (cfg.K > cfg.n_r) throw std::invalid_argument("SDMA bounds need K <= n_r");
    const double delta = 2.0 / p.alpha;
    SdmaBounds out{};
    out.regime = Regime::asymptotic;
    out.diversity = cfg.n_t * (cfg.n_r - cfg.K + 1);
    const double J = sdma_j(cfg.K, delta);
    const double td = std::pow(p.tau, delta);
    out.lb = cfg.K * q_star * (1.0 - q_star) * sdma_f(out.diversity, delta) /
             (J * td * cluster.u_max * cluster.u_max);
    out.ub = cfg.K * std::pow(4.0 * out.diversity, delta) * (1.0 - q_star) * -std::log1p(-q_star) /
             (J * td * cluster.u_min * cluster.u_min);
    out.k_star_lb = (p.alpha - 2.0) / (p.alpha + 2.0) * cfg.n_t;
    out.k_star_ub = (1.0 - 2.0 / p.alpha) * (cfg.n_t + 1.0);
    out.k_star_miso = (1.0 - 2.0 / p.alpha) * cfg.n_t;
    return out;
}

}  // namespace txcap
