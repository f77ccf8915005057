#include "txcap/extensions.hpp"

#include "txcap/numeric.hpp"
#include "txcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace txcap {

namespace {

void check_q(double q_star) {
    if (!(q_star > 0 && q_star < 1)) throw std::invalid_argument("target outage q* must lie in (0, 1)");
}

void require_no_guard(const NetworkParams& p) {
    p.validate();
    if (p.epsilon != 0) throw std::invalid_argument("fading formulas need epsilon = 0");
}

// tau / snr, the signal fade below which outage is certain.
double fade_floor(const NetworkParams& p) { return p.N > 0 ? p.tau / p.snr() : 0.0; }

}  // namespace

OpTcPair op_tc_rayleigh_exact(const NetworkParams& p, const FadeDistribution& interf_fade, double q_star) {
    require_no_guard(p);
    check_q(q_star);
    const double delta = p.delta();
    const double m = interf_fade.frac_moment(delta);
    if (!std::isfinite(m)) throw std::invalid_argument("interferer fade has infinite E[h^delta]");
    // All-Rayleigh uses the reflection identity directly.
    const double moment_term = interf_fade.is_rayleigh() ? pi * delta / std::sin(pi * delta) : m * gamma_fn(1.0 - delta);
    const double slope = ball_coeff(p.d) * moment_term * std::pow(p.tau, delta) * std::pow(p.u, p.d);
    const double noise = fade_floor(p);
    const double op = -std::expm1(-p.lambda * slope - noise);
    double tc = 0.0;
    const double need = -std::log1p(-q_star) - noise;
    if (need > 0) tc = need / slope * (1.0 - q_star);
    return {op, tc, Regime::exact};
}

FadingAsymptotic op_tc_fading_asymptotic(const NetworkParams& p, const FadeDistribution& signal_fade,
                                         const FadeDistribution& interf_fade, double q_star) {
    require_no_guard(p);
    check_q(q_star);
    const double delta = p.delta();
    const double mh = interf_fade.frac_moment(delta);
    const double floor = fade_floor(p);
    const double q0 = signal_fade.cdf(floor);
    const double keep = signal_fade.ccdf(floor);
    if (!(keep > 0)) throw std::invalid_argument("signal fade never clears tau / snr");
    double cond;
    if (p.N == 0) {
        cond = std::pow(p.tau, delta) * std::pow(p.u, p.d) * signal_fade.frac_moment(-delta);
    } else {
        // h0 / (tau u^alpha) - N / P = (h0 - floor) / (tau u^alpha).
        const double scale = p.tau * std::pow(p.u, p.alpha);
        cond = signal_fade.expect_excess([&](double s) { return std::pow(s / scale, -delta); }, floor) / keep;
    }
    if (!std::isfinite(cond) || !std::isfinite(mh))
        throw numerical_failure("conditional fade moment diverges");
    const double slope = ball_coeff(p.d) * mh * cond;
    const double op = 1.0 - (1.0 - slope * p.lambda) * (1.0 - q0);
    double tc = 0.0;
    if (q_star > q0) tc = (q_star - q0) / (1.0 - q0) / slope;
    return {op, tc, q0, slope, Regime::asymptotic};
}

double op_lb_fading(const NetworkParams& p, const FadeDistribution& signal_fade, const FadeDistribution& interf_fade) {
    require_no_guard(p);
    const double delta = p.delta();
    const double theta = p.lambda * ball_coeff(p.d) * interf_fade.frac_moment(delta);
    if (p.N == 0) {
        if (theta == 0) return 0.0;
        return 1.0 - signal_fade.mgf_neg_power(delta, theta * std::pow(p.tau, delta) * std::pow(p.u, p.d));
    }
    const double floor = fade_floor(p);
    const double scale = p.tau * std::pow(p.u, p.alpha);
    // The indicator carries the conditioning: E[.|E0] q0bar = E[. 1{h0 > floor}].
    const double survive = signal_fade.expect_excess(
        [&](double s) { return s > 0 ? std::exp(-theta * std::pow(s / scale, -delta)) : 0.0; }, floor);
    return 1.0 - survive;
}

// ---- VLD -----------------------------------------------------------------------

VldResult op_tc_vld(const NetworkParams& p, const LinkDistanceLaw& law, double q_star) {
    check_q(q_star);
    if (!(p.alpha > p.d)) throw std::invalid_argument("alpha must exceed d");
    if (p.epsilon != 0 || p.N != 0) throw std::invalid_argument("VLD formulas need epsilon = 0 and N = 0");
    if (law.dim() != p.d) throw std::invalid_argument("link distance law dimension differs from d");
    if (!(p.lambda >= 0) || !(p.tau > 0)) throw std::invalid_argument("need lambda >= 0 and tau > 0");
    const double delta = p.delta();
    const double cd = ball_coeff(p.d);
    const double td = std::pow(p.tau, delta);
    const double mud = law.moment_d();
    VldResult r{};
    r.asymptotic = {cd * td * mud * p.lambda, q_star / (cd * td * mud), Regime::asymptotic};
    r.op_lb = 1.0 - law.mgf_neg_power_d(p.lambda * cd * td);
    r.tc_ub = tc_from_op([&](double l) { return 1.0 - law.mgf_neg_power_d(l * cd * td); }, q_star,
                         q_star / (cd * td * mud));
    r.penalty = mud / std::pow(law.mean(), p.d);
    r.op_exact = std::numeric_limits<double>::quiet_NaN();
    if (std::fabs(delta - 0.5) < 1e-12) {
        const int d = p.d;
        const double lam = p.lambda;
        r.op_exact = law.expect([&](double u) {
            const double z = std::sqrt(pi / 2.0) * std::pow(u, d) * std::sqrt(p.tau) * cd * lam;
            return std::erf(z / std::sqrt(2.0));
        });
    }
    return r;
}

// ---- multihop ------------------------------------------------------------------

void MultihopParams::validate() const {
    if (!(U > 0)) throw std::invalid_argument("end-to-end distance U must be positive");
    if (A < 1) throw std::invalid_argument("attempt budget A must be at least 1");
    if (M < 1 || M > A) throw std::invalid_argument("hop count M must lie in [1, A]");
    if (!(alpha > 2)) throw std::invalid_argument("alpha must exceed d");
    if (!(lambda >= 0)) throw std::invalid_argument("lambda must be nonnegative");
    if (!(tau > 0) || !(P > 0) || !(N >= 0)) throw std::invalid_argument("need tau > 0, P > 0, N >= 0");
}

double k_alpha(double alpha) {
    const double delta = 2.0 / alpha;
    return pi * pi * delta / std::sin(pi * delta);
}

namespace {
double k2_of(const MultihopParams& mp) {
    return mp.lambda * k_alpha(mp.alpha) * std::pow(mp.tau, mp.delta()) * mp.U * mp.U;
}
double k1_of(const MultihopParams& mp) { return mp.tau * mp.N * std::pow(mp.U, mp.alpha) / mp.P; }

double ub_objective(const MultihopParams& mp, double M) {
    return std::exp(-k2_of(mp) / (M * M) - k1_of(mp) * std::pow(M, -mp.alpha)) / M;
}
}  // namespace

double multihop_hop_op(const MultihopParams& mp, int M) {
    if (M < 1) throw std::invalid_argument("hop count must be at least 1");
    const double m = static_cast<double>(M);
    return -std::expm1(-k2_of(mp) / (m * m) - k1_of(mp) * std::pow(m, -mp.alpha));
}

PascalStats pascal_stats(int M, double q, int A) {
    if (M < 1 || A < 1) throw std::invalid_argument("need M >= 1 and A >= 1");
    if (!(q >= 0 && q < 1)) throw std::invalid_argument("per-trial outage must lie in [0, 1)");
    if (M > A) return {0.0, static_cast<double>(A)};
    if (q == 0) return {1.0, static_cast<double>(M)};
    const double lp = std::log1p(-q), lq = std::log(q);
    double done = 0.0, mean = 0.0;
    for (int t = M; t <= A; ++t) {
        const double lpmf = log_gamma(t) - log_gamma(M) - log_gamma(t - M + 1.0) + M * lp + (t - M) * lq;
        const double pmf = std::exp(lpmf);
        done += pmf;
        mean += t * pmf;
    }
    done = std::min(done, 1.0);
    mean += A * (1.0 - done);
    return {done, mean};
}

MultihopResult multihop_tc(const MultihopParams& mp) {
    mp.validate();
    MultihopResult r{};
    r.ratio_exact.resize(static_cast<std::size_t>(mp.A));
    r.ratio_ub.resize(static_cast<std::size_t>(mp.A));
    double best_e = -1, best_u = -1;
    for (int M = 1; M <= mp.A; ++M) {
        const double q = multihop_hop_op(mp, M);
        double re = 0.0;
        if (q < 1.0) {
            const PascalStats s = pascal_stats(M, q, mp.A);
            re = s.p_done / s.mean_truncated;
        }
        const double ru = (1.0 - q) / M;
        r.ratio_exact[M - 1] = re;
        r.ratio_ub[M - 1] = ru;
        if (re > best_e) {
            best_e = re;
            r.m_exact = M;
        }
        if (ru > best_u) {
            best_u = ru;
            r.m_ub = M;
        }
    }
    r.exact = mp.lambda * best_e;
    r.ub = mp.lambda * best_u;
    return r;
}

double optimal_hops_root_numeric(const MultihopParams& mp) {
    const double k1 = k1_of(mp), k2 = k2_of(mp), a = mp.alpha;
    if (k1 == 0 && k2 == 0) return 0.0;
    // Divided by M^(alpha-2) the polynomial is increasing in M, so its positive root is unique.
    auto g = [&](double M) { return M * M - 2.0 * k2 - a * k1 * std::pow(M, 2.0 - a); };
    double lo = std::sqrt(2.0 * k2);
    if (lo == 0) lo = std::pow(a * k1, 1.0 / a) * 1e-3;
    double hi = std::max(2.0 * lo, 1e-300);
    for (int i = 0; i < 2000 && g(hi) <= 0; ++i) hi *= 2.0;
    if (g(lo) >= 0) return lo;
    return num::bisect(g, lo, hi);
}

double optimal_hops_closed_form4(const MultihopParams& mp) {
    if (mp.alpha != 4.0) throw std::invalid_argument("closed form needs alpha = 4");
    const double l = mp.lambda;
    return std::pow(mp.tau, 0.25) * mp.U *
           std::sqrt(l * pi * pi / 2.0 + std::sqrt(l * l * std::pow(pi, 4) / 4.0 + 4.0 * mp.N / mp.P));
}

double optimal_hops_closed_form3(const MultihopParams& mp) {
    if (mp.alpha != 3.0) throw std::invalid_argument("closed form needs alpha = 3");
    const double K3 = 4.0 / 9.0 * std::sqrt(3.0) * pi * pi;
    const double c = 1.5 * mp.N / mp.P;
    const double disc = c * c - 8.0 * K3 * K3 * K3 * std::pow(mp.lambda, 3) / 27.0;
    const double scale = std::cbrt(mp.tau) * mp.U;
    if (disc >= 0) {
        // cbrt(c - f) = (2 K3 lambda / 3) / cbrt(c + f) avoids cancellation.
        const double r = std::cbrt(c + std::sqrt(disc));
        return scale * (r + 2.0 * K3 * mp.lambda / (3.0 * r));
    }
    // Three real roots; take the largest.
    const double arg = 9.0 * std::sqrt(3.0) * mp.N / (4.0 * std::sqrt(2.0) * mp.P * std::pow(mp.lambda * K3, 1.5));
    return 2.0 * std::sqrt(2.0 * mp.lambda * K3 / 3.0) * scale * std::cos(std::acos(std::clamp(arg, -1.0, 1.0)) / 3.0);
}

HopChoice optimal_hops(const MultihopParams& mp) {
    mp.validate();
    HopChoice h{};
    if (k1_of(mp) == 0 && k2_of(mp) == 0) {
        h.root = 0.0;
        h.m_star = 1;
        h.method = "none";
        h.flagged = true;
        return h;
    }
    if (mp.alpha == 4.0) {
        h.root = optimal_hops_closed_form4(mp);
        h.method = "closed_form_alpha4";
    } else if (mp.alpha == 3.0) {
        h.root = optimal_hops_closed_form3(mp);
        h.method = "closed_form_alpha3";
    } else {
        h.root = optimal_hops_root_numeric(mp);
        h.method = "bisection";
    }
    const int lo = std::clamp(static_cast<int>(std::floor(h.root)), 1, mp.A);
    const int hi = std::clamp(static_cast<int>(std::ceil(h.root)), 1, mp.A);
    h.m_star = ub_objective(mp, hi) > ub_objective(mp, lo) ? hi : lo;
    return h;
}

}  // namespace txcap
