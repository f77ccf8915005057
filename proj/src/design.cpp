#include "txcap/design.hpp"

#include "txcap/numeric.hpp"
#include "txcap/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace txcap {

namespace {

const double ln2 = std::log(2.0);

void check_q(double q_star) {
    if (!(q_star > 0 && q_star < 1)) throw std::invalid_argument("target outage q* must lie in (0, 1)");
}

void require_feasible_ebno(double ebno) {
    if (!(ebno > ln2))
        throw std::invalid_argument("energy per bit must exceed ln 2 (-1.59 dB) for any positive spectral efficiency");
}

void require_no_guard(const NetworkParams& p) {
    p.validate();
    if (p.epsilon != 0) throw std::invalid_argument("design formulas need epsilon = 0");
}

}  // namespace

// ---- spectrum --------------------------------------------------------------

double SpectrumParams::ebno() const { return net.P * std::pow(net.u, -net.alpha) / (eta * R); }

double SpectrumParams::snr_full() const { return net.P * std::pow(net.u, -net.alpha) / (eta * W); }

void SpectrumParams::validate() const {
    if (!(W > 0) || !(R > 0) || !(eta > 0)) throw std::invalid_argument("W, R and eta must be positive");
    if (!(B >= 1)) throw std::invalid_argument("band count B must be at least 1");
    if (net.d < 1 || net.d > 3) throw std::invalid_argument("dimension d must be 1, 2 or 3");
    if (!(net.alpha > net.d)) throw std::invalid_argument("alpha must exceed d");
    if (!(net.u > 0) || !(net.P > 0)) throw std::invalid_argument("u and P must be positive");
}

double spectrum_objective_nu(double nu, double ebno, double delta) {
    if (!(nu > 0)) throw std::invalid_argument("spectral efficiency must be positive");
    const double inner = 1.0 / std::expm1(nu * ln2) - 1.0 / (ebno * nu);
    if (!(inner > 0)) throw std::invalid_argument("spectral efficiency beyond the feasible range (inner bracket <= 0)");
    return nu * std::pow(inner, delta);
}

double spectrum_objective_bands(const SpectrumParams& p, double B) {
    p.validate();
    if (!(B > 0)) throw std::invalid_argument("band count must be positive");
    const double inner = 1.0 / std::expm1(p.R * B / p.W * ln2) - 1.0 / (p.snr_full() * B);
    if (!(inner > 0)) throw std::invalid_argument("band count beyond the feasible range (inner bracket <= 0)");
    return B * std::pow(inner, p.delta());
}

double max_spectral_efficiency_low_snr(double ebno) {
    return 2.0 * (ebno - ln2) / (ln2 * (2.0 * ebno - ln2));
}

double optimal_spectral_efficiency_low_snr(double ebno, double delta) {
    const double x = ebno - ln2;
    return 2.0 * (1.0 - delta) * x / (ln2 * (ln2 - (1.0 - 2.0 * delta) * x));
}

double max_spectral_efficiency(double ebno) {
    require_feasible_ebno(ebno);
    if (!std::isfinite(ebno)) return inf;
    // h > 0 below the fixed point and < 0 above it (log2(1 + e nu) is concave).
    auto h = [ebno](double nu) { return std::log1p(ebno * nu) / ln2 - nu; };
    double nu = std::max(max_spectral_efficiency_low_snr(ebno), 1e-300);
    for (int i = 0; i < 200; ++i) {
        const double next = 0.5 * nu + 0.5 * std::log1p(ebno * nu) / ln2;
        if (std::fabs(next - nu) <= 1e-15 * nu) {
            nu = next;
            break;
        }
        nu = next;
    }
    double lo = nu, hi = nu;
    while (h(lo) <= 0 && lo > 1e-300) lo *= 0.5;
    while (h(hi) >= 0 && hi < 1e300) hi *= 2.0;
    return num::bisect(h, lo, hi);
}

double optimal_spectral_efficiency(double ebno, double delta) {
    require_feasible_ebno(ebno);
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
    if (!std::isfinite(ebno)) return optimal_spectral_efficiency_high_snr(delta);
    const double nu_max = max_spectral_efficiency(ebno);
    // First-order condition divided by nu^2; positive at 0+, negative at nu_max.
    auto G = [ebno, delta](double nu) {
        const double e = std::expm1(nu * ln2);
        return (ebno * nu * e - (1.0 - delta) * e * e - delta * ln2 * ebno * nu * nu * (1.0 + e)) / (nu * nu);
    };
    return num::bisect(G, 1e-9 * nu_max, nu_max);
}

double optimal_spectral_efficiency_high_snr(double delta) {
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
    auto f = [delta](double nu) { return -std::expm1(-nu * ln2) - ln2 * delta * nu; };
    const double hi = 1.0 / (ln2 * delta);
    return num::bisect(f, 1e-9 * hi, hi);
}

SpectrumOptimum spectrum_optimum(const SpectrumParams& p, double q_star) {
    p.validate();
    check_q(q_star);
    const double delta = p.delta();
    const double ebno = p.ebno();
    SpectrumOptimum out{};
    out.nu_star = optimal_spectral_efficiency(ebno, delta);
    out.B_continuous = out.nu_star * p.W / p.R;
    const double y = inverse_sn_ccdf_unit(delta, q_star);
    out.kappa = 2.0 * (1.0 - q_star) / (ball_coeff(p.net.d) * std::pow(p.net.u, p.net.d) * std::pow(y, delta));
    out.tc_continuous = out.kappa * (p.W / p.R) * spectrum_objective_nu(out.nu_star, ebno, delta);

    // Round and compare; an infeasible neighbour scores zero.
    auto score = [&](double B) {
        if (B < 1) return -1.0;
        try {
            return spectrum_objective_bands(p, B);
        } catch (const std::invalid_argument&) {
            return -1.0;
        }
    };
    const double lo = std::floor(out.B_continuous), hi = lo + 1.0;
    const double s_lo = score(lo), s_hi = score(hi);
    if (s_lo < 0 && s_hi < 0) {
        out.B_star = 0;
        out.tc = 0.0;
    } else {
        out.B_star = static_cast<int>(s_hi > s_lo ? hi : lo);
        out.tc = out.kappa * std::max(s_lo, s_hi);
    }
    return out;
}

double spectrum_tc(const SpectrumParams& p, double q_star) {
    p.validate();
    check_q(q_star);
    const double y = inverse_sn_ccdf_unit(p.delta(), q_star);
    const double kappa =
        2.0 * (1.0 - q_star) / (ball_coeff(p.net.d) * std::pow(p.net.u, p.net.d) * std::pow(y, p.delta()));
    return kappa * spectrum_objective_bands(p, p.B);
}

// ---- interference cancellation ---------------------------------------------

void IcParams::validate() const {
    require_no_guard(net);
    if (!(kappa >= 0 && kappa <= 1)) throw std::invalid_argument("kappa must lie in [0, 1]");
    if (K < 0) throw std::invalid_argument("cancellable count K must be nonnegative");
    if (!(P_min > 0)) throw std::invalid_argument("P_min must be positive");
}

double ic_op_lb(const IcParams& p) {
    p.validate();
    const double delta = p.net.delta();
    const double c = p.net.lambda * ball_coeff(p.net.d) / 2.0;
    const double xid = std::pow(p.net.xi(), p.net.d);
    const double t_ud = c * xid;
    if (p.K == 0 || p.net.lambda == 0) return -std::expm1(-2.0 * t_ud);
    const double t_pd = c * std::pow(p.kappa, delta) * xid;
    const double cap = c * std::pow(p.net.P / p.P_min, delta);

    // |t_K| ~ Gamma(K, rate 2). The integrand exp(-2 min(t, t_pd)) exp(-2 (t_ud - t)^+)
    // is piecewise exp(const) or exp(2 t) below the cap and constant above it,
    // so every piece integrates in closed form.
    const double K = p.K;
    auto P = [K](double t) { return t <= 0 ? 0.0 : boost::math::gamma_p(K, 2.0 * t); };
    const double b1 = std::min(t_pd, cap), b2 = std::min(t_ud, cap);
    double E = std::exp(-2.0 * t_ud) * P(b1);
    if (b2 > b1) {
        // int 2^K t^{K-1} / (K-1)! dt = (2t)^K / K!.
        auto mom = [&](double t) {
            return t <= 0 ? 0.0 : std::exp(K * std::log(2.0 * t) - std::lgamma(K + 1.0) - 2.0 * (t_pd + t_ud));
        };
        E += mom(b2) - mom(b1);
    }
    E += std::exp(-2.0 * t_pd) * (P(cap) - P(b2));
    const double g_cap = std::exp(-2.0 * std::min(cap, t_pd) - 2.0 * std::max(t_ud - cap, 0.0));
    E += g_cap * boost::math::gamma_q(K, 2.0 * cap);
    return std::clamp(1.0 - E, 0.0, 1.0);
}

// ---- fading threshold scheduling -------------------------------------------

void FtsParams::validate() const {
    require_no_guard(net);
    if (!(lambda_pot >= 0) || !std::isfinite(lambda_pot)) throw std::invalid_argument("lambda_pot must be finite and >= 0");
    if (!(h_hat >= 0)) throw std::invalid_argument("fade threshold must be nonnegative");
    if (net.N > 0 && !(h_hat > net.tau / net.snr()))
        throw std::invalid_argument("fade threshold must exceed tau / snr so success is possible without interference");
    if (!(fade.ccdf(h_hat) > 0)) throw std::invalid_argument("fade threshold lies beyond the fade support");
}

namespace {

// E[(h / (tau u^alpha) - N / P)^-delta 1{h > h_hat}].
double fts_signal_term(const FtsParams& p) {
    const double delta = p.net.delta();
    if (p.net.N == 0)
        return std::pow(p.net.tau, delta) * std::pow(p.net.u, p.net.d) * p.fade.cond_neg_moment(delta, p.h_hat);
    const double scale = p.net.tau * std::pow(p.net.u, p.net.alpha);
    const double nP = p.net.N / p.net.P;
    return p.fade.expect_above([&](double h) { return std::pow(h / scale - nP, -delta); }, p.h_hat);
}

}  // namespace

double fts_b(const FtsParams& p) {
    const double delta = p.net.delta();
    return ball_coeff(p.net.d) * std::pow(p.net.tau, delta) * std::pow(p.net.u, p.net.d) * p.fade.frac_moment(delta);
}

FtsAsymptotic fts_asymptotic(const FtsParams& p) {
    p.validate();
    const double keep = p.fade.ccdf(p.h_hat);
    const double per_pot = ball_coeff(p.net.d) * p.fade.frac_moment(p.net.delta()) * fts_signal_term(p);
    const double op = per_pot * p.lambda_pot;
    return {op, p.lambda_pot * keep * (1.0 - op), per_pot / keep};
}

FtsThreshold fts_optimal_threshold(const FtsParams& p) {
    require_no_guard(p.net);
    if (p.net.N != 0) throw std::invalid_argument("the TP-optimal threshold is defined for N = 0");
    if (!(p.lambda_pot > 0)) throw std::invalid_argument("lambda_pot must be positive");
    const double delta = p.net.delta();
    const double target = 1.0 / (fts_b(p) * p.lambda_pot);
    // Strictly decreasing in h_hat.
    auto lhs = [&](double h) { return p.fade.cond_neg_moment(delta, h) + std::pow(h, -delta) * p.fade.ccdf(h); };
    const double lo = std::max(p.fade.support_lo(), 1e-12), hi = p.fade.support_hi();
    if (lhs(lo) <= target) return {lo, true};
    if (lhs(hi) >= target) return {hi, true};
    return {num::bisect([&](double h) { return lhs(h) - target; }, lo, hi, 1e-13), false};
}

FtsBound fts_op_lb(const FtsParams& p) {
    p.validate();
    const double delta = p.net.delta();
    const double keep = p.fade.ccdf(p.h_hat);
    const double theta = p.lambda_pot * keep * ball_coeff(p.net.d) * p.fade.frac_moment(delta);
    if (theta == 0) return {0.0, p.lambda_pot * keep};
    const double scale = p.net.tau * std::pow(p.net.u, p.net.alpha);
    const double nP = p.net.N / p.net.P;
    // Signal fade is the law truncated to h > h_hat.
    const double q = p.fade.expect_above(
                         [&](double h) { return -std::expm1(-theta * std::pow(h / scale - nP, -delta)); }, p.h_hat) /
                     keep;
    return {q, p.lambda_pot * keep * (1.0 - q)};
}

TpComparison fts_tp_comparison(const FtsParams& p, double lambda_hat) {
    require_no_guard(p.net);
    if (p.net.N != 0) throw std::invalid_argument("the TP comparison is defined for N = 0");
    if (!(lambda_hat > 0 && lambda_hat <= p.lambda_pot))
        throw std::invalid_argument("lambda_hat must lie in (0, lambda_pot]");
    const double delta = p.net.delta();
    const double a = ball_coeff(p.net.d) * std::pow(p.net.tau, delta) * std::pow(p.net.u, p.net.d);
    const double mh = p.fade.frac_moment(delta);
    const double h_hat = p.fade.ccdf_inverse(lambda_hat / p.lambda_pot);
    const double cond = p.fade.cond_neg_moment(delta, h_hat) / p.fade.ccdf(h_hat);
    return {lambda_hat * (1.0 - a * lambda_hat), lambda_hat * (1.0 - a * mh * p.fade.frac_moment(-delta) * lambda_hat),
            lambda_hat * (1.0 - a * mh * cond * lambda_hat)};
}

// ---- fractional power control ----------------------------------------------

void FpcParams::validate() const {
    require_no_guard(net);
    if (!std::isfinite(f)) throw std::invalid_argument("FPC exponent f must be finite");
    if (net.N > 0 && !(f < 1)) throw std::invalid_argument("with noise the FPC exponent must satisfy f < 1");
}

namespace {

bool same_law(const FadeDistribution& a, const FadeDistribution& b) {
    return a.is_rayleigh() && b.is_rayleigh();
}

// E[h10^delta] E[h11^{-f delta}] E[h11^{-f}]^{-delta}, times (E[h00^{-f}] / E[h11^{-f}])^delta
// when with_signal is set. Equal Rayleigh laws cancel the ratio exactly.
double fpc_interference_factor(const FpcParams& p, bool with_signal) {
    const double delta = p.net.delta();
    const double base = p.cross.frac_moment(delta) * p.own.frac_moment(-p.f * delta);
    if (with_signal && same_law(p.signal, p.own)) return base;
    const double e11 = p.own.frac_moment(-p.f);
    double r = base * std::pow(e11, -delta);
    if (with_signal) r *= std::pow(p.signal.frac_moment(-p.f), delta);
    return r;
}

// Signal fade below which outage is certain; 0 without noise.
double fpc_floor(const FpcParams& p) {
    if (p.net.N == 0) return 0.0;
    return std::pow(p.net.tau / p.net.snr() * p.signal.frac_moment(-p.f), 1.0 / (1.0 - p.f));
}

// (h^{1-f} - floor^{1-f}) as a function of s = h - floor.
double fpc_excess(double s, double floor, double f) {
    return std::pow(floor, 1.0 - f) * std::expm1((1.0 - f) * std::log1p(s / floor));
}

}  // namespace

FpcAsymptotic fpc_asymptotic(const FpcParams& p, double q_star) {
    p.validate();
    check_q(q_star);
    const double delta = p.net.delta();
    const double cd = ball_coeff(p.net.d);
    double q0 = 0.0, slope;
    if (p.net.N == 0) {
        slope = cd * std::pow(p.net.tau, delta) * std::pow(p.net.u, p.net.d) * fpc_interference_factor(p, true) *
                p.signal.frac_moment(-(1.0 - p.f) * delta);
    } else {
        const double floor = fpc_floor(p);
        q0 = p.signal.cdf(floor);
        const double keep = 1.0 - q0;
        if (!(keep > 0)) throw std::invalid_argument("signal fade never clears the FPC outage floor");
        const double scale = p.signal.frac_moment(-p.f) * p.net.tau * std::pow(p.net.u, p.net.alpha);
        const double cond =
            p.signal.expect_excess([&](double s) { return std::pow(fpc_excess(s, floor, p.f) / scale, -delta); },
                                   floor) /
            keep;
        slope = cd * fpc_interference_factor(p, false) * cond;
    }
    if (!std::isfinite(slope) || std::isnan(slope)) return {1.0, 0.0, q0, inf, Regime::asymptotic};
    const double op = 1.0 - (1.0 - slope * p.net.lambda) * (1.0 - q0);
    const double tc = q_star > q0 ? (q_star - q0) / (1.0 - q0) / slope : 0.0;
    return {op, tc, q0, slope, Regime::asymptotic};
}

double fpc_op_lb(const FpcParams& p) {
    p.validate();
    const double delta = p.net.delta();
    const double cd = ball_coeff(p.net.d);
    if (p.net.N == 0) {
        const double b = cd * std::pow(p.net.tau, delta) * std::pow(p.net.u, p.net.d) * fpc_interference_factor(p, true);
        if (!std::isfinite(b)) return 1.0;
        const double theta = b * p.net.lambda;
        const double pw = (1.0 - p.f) * delta;
        if (theta == 0) return 0.0;
        if (pw > 0) return 1.0 - p.signal.mgf_neg_power(pw, theta);
        return p.signal.expect_above([&](double h) { return -std::expm1(-theta * std::pow(h, -pw)); }, 0.0);
    }
    const double floor = fpc_floor(p);
    const double q0 = p.signal.cdf(floor);
    const double a = cd * fpc_interference_factor(p, false);
    if (!std::isfinite(a)) return 1.0;
    const double scale = p.signal.frac_moment(-p.f) * p.net.tau * std::pow(p.net.u, p.net.alpha);
    const double theta = a * p.net.lambda;
    const double hit = p.signal.expect_excess(
        [&](double s) { return -std::expm1(-theta * std::pow(fpc_excess(s, floor, p.f) / scale, -delta)); }, floor);
    return std::min(1.0, q0 + hit);
}

double fpc_power_moment(double P, double f, double p) {
    if (!(f < 1)) throw std::invalid_argument("FPC power moments need f < 1");
    if (!(p * f < 1)) return inf;
    return std::pow(P / gamma_fn(1.0 - f), p) * gamma_fn(1.0 - p * f);
}

PowerMoments fpc_power_moments(double P, double f) {
    if (!(f < 1)) throw std::invalid_argument("FPC power moments need f < 1");
    const double m1 = fpc_power_moment(P, f, 1.0);
    const double m2 = fpc_power_moment(P, f, 2.0);
    const double g = gamma_fn(1.0 - f);
    const double var = f < 0.5 ? P * P * (gamma_fn(1.0 - 2.0 * f) / (g * g) - 1.0) : inf;
    return {m1, m2, var};
}

}  // namespace txcap
