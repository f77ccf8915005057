#include "txcap/basic.hpp"

#include "txcap/numeric.hpp"
#include "txcap/shotnoise.hpp"
#include "txcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace txcap {

double NetworkParams::snr() const { return N > 0 ? P * std::pow(u, -alpha) / N : inf; }

double NetworkParams::threshold() const { return std::pow(u, -alpha) / tau - N / P; }

double NetworkParams::xi() const { return std::pow(threshold(), -1.0 / alpha); }

void NetworkParams::validate() const {
    if (d < 1 || d > 3) throw std::invalid_argument("dimension d must be 1, 2 or 3");
    if (!(alpha > d)) throw std::invalid_argument("alpha must exceed d");
    if (!(lambda >= 0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be a finite nonnegative number");
    if (!(epsilon >= 0)) throw std::invalid_argument("epsilon must be nonnegative");
    if (!(u > 0)) throw std::invalid_argument("link distance u must be positive");
    if (!(u > epsilon)) throw std::invalid_argument("link distance u must exceed the guard radius epsilon");
    if (!(tau > 0)) throw std::invalid_argument("SINR threshold tau must be positive");
    if (!(P > 0)) throw std::invalid_argument("transmit power P must be positive");
    if (!(N >= 0)) throw std::invalid_argument("noise power N must be nonnegative");
    if (N > 0 && !(snr() > tau)) {
        std::ostringstream os;
        os << "snr <= tau (snr=" << snr() << ", tau=" << tau << "): the link fails even without interference";
        throw std::invalid_argument(os.str());
    }
    if (!(epsilon < xi())) throw std::invalid_argument("guard radius epsilon must be below the dominance radius xi");
}

NetworkParams NetworkParams::with_lambda(double l) const {
    NetworkParams q = *this;
    q.lambda = l;
    return q;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::exact: return "exact";
        case Regime::asymptotic: return "asymptotic";
        case Regime::lower_bound: return "lower_bound";
        case Regime::upper_bound: return "upper_bound";
        case Regime::upper_bound_markov: return "upper_bound_markov";
        case Regime::upper_bound_chebychev: return "upper_bound_chebychev";
        case Regime::upper_bound_chernoff: return "upper_bound_chernoff";
    }
    return "unknown";
}

namespace {

void check_q(double q_star) {
    if (!(q_star > 0 && q_star < 1)) throw std::invalid_argument("target outage q* must lie in (0, 1)");
}

void require_half(const NetworkParams& p) {
    p.validate();
    if (p.epsilon != 0) throw std::invalid_argument("exact delta=1/2 formula needs epsilon = 0");
    if (std::fabs(p.alpha - 2.0 * p.d) > 1e-12) throw std::invalid_argument("exact delta=1/2 formula needs alpha = 2d");
}

double dominant_volume(const NetworkParams& p) {
    return ball_coeff(p.d) * (std::pow(p.xi(), p.d) - std::pow(p.epsilon, p.d));
}

}  // namespace

double op_exact_half(const NetworkParams& p) {
    require_half(p);
    const double z = std::sqrt((pi / 2.0) / p.threshold()) * ball_coeff(p.d) * p.lambda;
    // 2 F(z) - 1 = erf(z / sqrt 2) without cancellation.
    return std::erf(z / std::sqrt(2.0));
}

double tc_exact_half(const NetworkParams& p, double q_star) {
    require_half(p);
    check_q(q_star);
    return std::sqrt(p.threshold() / (pi / 2.0)) * normal_quantile((1.0 + q_star) / 2.0) * (1.0 - q_star) /
           ball_coeff(p.d);
}

OpTcPair op_tc_asymptotic(const NetworkParams& p, double q_star) {
    p.validate();
    check_q(q_star);
    if (p.epsilon != 0) throw std::invalid_argument("asymptotic OP needs epsilon = 0");
    const double g = std::pow(p.threshold(), p.delta());
    const double cd = ball_coeff(p.d);
    return {cd * p.lambda / g, g * q_star / cd, Regime::asymptotic};
}

OpTcPair op_lb_tc_ub(const NetworkParams& p, double q_star) {
    p.validate();
    check_q(q_star);
    const double a = dominant_volume(p);
    return {-std::expm1(-p.lambda * a), -(1.0 - q_star) * std::log1p(-q_star) / a, Regime::lower_bound};
}

namespace {
double q_lb_of(const NetworkParams& p) { return -std::expm1(-p.lambda * dominant_volume(p)); }
}  // namespace

double op_ub_markov(const NetworkParams& p) {
    p.validate();
    const double qlb = q_lb_of(p);
    const double tail = p.lambda * p.d * ball_coeff(p.d) / (p.alpha - p.d) * std::pow(p.xi(), p.d);
    return qlb + (1.0 - qlb) * std::min(1.0, tail);
}

double op_ub_chebychev(const NetworkParams& p) {
    p.validate();
    const double k = p.lambda * p.d * ball_coeff(p.d) * std::pow(p.xi(), p.d);
    const double m = k / (p.alpha - p.d);
    if (m >= 1.0) return 1.0;
    const double qlb = q_lb_of(p);
    const double tail = k / (2.0 * p.alpha - p.d) / ((1.0 - m) * (1.0 - m));
    return qlb + (1.0 - qlb) * std::min(1.0, tail);
}

ChernoffExponent chernoff_exponent(const NetworkParams& p) {
    p.validate();
    if (p.lambda == 0) return {inf, inf};
    const double y0 = p.threshold();
    const SnSpec spec(p.d, p.lambda, p.alpha, 0.0);
    auto J = [&](double theta) { return theta * y0 - sn_log_mgf_capped(spec, theta, y0); };
    // e^{theta y0} must stay representable inside the integrand.
    const double hi = 700.0 / y0;
    const double theta = num::golden_max(J, 0.0, hi, 1e-10 * hi);
    return {std::max(0.0, J(theta)), theta};
}

double op_ub_chernoff(const NetworkParams& p) {
    const double qlb = q_lb_of(p);
    const ChernoffExponent c = chernoff_exponent(p);
    return qlb + (1.0 - qlb) * std::exp(-c.c);
}

double tc_from_op(const std::function<double(double)>& op_of_lambda, double q_star, double lambda_hint) {
    check_q(q_star);
    auto f = [&](double l) { return op_of_lambda(l) - q_star; };
    if (f(0.0) >= 0) return 0.0;
    double hi = lambda_hint > 0 ? lambda_hint : 1.0;
    for (int i = 0; i < 200 && f(hi) < 0; ++i) hi *= 2.0;
    if (f(hi) < 0) throw numerical_failure("could not bracket the target outage");
    const double lam = num::bisect(f, 0.0, hi, 1e-14 * hi);
    return lam * (1.0 - q_star);
}

// ---- general delta ------------------------------------------------------

double inverse_sn_ccdf_unit(double delta, double q) {
    check_q(q);
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
    if (std::fabs(delta - 0.5) < 1e-14) {
        const double z = normal_quantile((1.0 + q) / 2.0);
        return 2.0 * pi / (z * z);
    }
    // The series is only controlled where its argument stays below 1.
    const double y_min = std::pow(2.0 * gamma_fn(1.0 - delta) / 0.95, 1.0 / delta);
    auto ccdf = [delta](double y) { return sn_ccdf_series_auto(1.0, delta, 1.0, y).value; };
    if (ccdf(y_min) < q)
        throw numerical_failure("target outage too large for the series inverse (delta != 1/2)");
    double hi = 2.0 * y_min;
    for (int i = 0; i < 400 && ccdf(hi) > q; ++i) hi *= 2.0;
    const double y = num::bisect([&](double v) { return ccdf(v) - q; }, y_min, hi);
    const SeriesValue s = sn_ccdf_series_auto(1.0, delta, 1.0, y);
    if (s.error_bound > 1e-8 * q) throw numerical_failure("series inverse not accurate enough");
    return y;
}

double op_general(const NetworkParams& p) {
    p.validate();
    if (p.epsilon != 0) throw std::invalid_argument("general-delta exact OP needs epsilon = 0");
    if (p.lambda == 0) return 0.0;
    const double delta = p.delta();
    if (std::fabs(delta - 0.5) < 1e-14) return op_exact_half(p);
    const double scale = std::pow(0.5 * p.lambda * ball_coeff(p.d), 1.0 / delta);
    try {
        return sn_ccdf_series_auto(1.0, delta, 1.0, p.threshold() / scale).value;
    } catch (const std::domain_error& e) {
        throw numerical_failure(e.what());
    }
}

double tc_general(const NetworkParams& p, double q_star) {
    p.validate();
    check_q(q_star);
    if (p.epsilon != 0) throw std::invalid_argument("general-delta exact TC needs epsilon = 0");
    const double y = inverse_sn_ccdf_unit(p.delta(), q_star);
    return 2.0 * std::pow(p.xi(), -p.d) * std::pow(y, -p.delta()) / ball_coeff(p.d) * (1.0 - q_star);
}

// ---- throughput -----------------------------------------------------------

Throughput throughput(const NetworkParams& p) {
    p.validate();
    if (p.epsilon == 0 && std::fabs(p.alpha - 2.0 * p.d) <= 1e-12) {
        const double q = op_exact_half(p);
        return {p.lambda * (1.0 - q), q, Regime::exact};
    }
    const double a = dominant_volume(p);
    return {p.lambda * std::exp(-p.lambda * a), -std::expm1(-p.lambda * a), Regime::upper_bound};
}

TpOptimum tp_ub_optimum(const NetworkParams& p) {
    p.validate();
    const double a = dominant_volume(p);
    return {a, 1.0 / a, 1.0 / (std::exp(1.0) * a), -std::expm1(-1.0)};
}

TcOptimum tc_ub_optimum(const NetworkParams& p) {
    p.validate();
    const double a = dominant_volume(p);
    // d/dq of -(1-q) ln(1-q) vanishes where ln(1-q) + 1 = 0.
    const double q = num::bisect([](double x) { return std::log1p(-x) + 1.0; }, 1e-12, 1.0 - 1e-12);
    return {q, -(1.0 - q) * std::log1p(-q) / a};
}

Aloha slotted_aloha(long long n, double p) {
    if (n < 1) throw std::invalid_argument("user count n must be at least 1");
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("access probability p must lie in [0, 1]");
    const double idle = std::pow(1.0 - p, static_cast<double>(n - 1));
    return {static_cast<double>(n) * p * idle, 1.0 - idle};
}

Aloha slotted_aloha_asymptotic(double lambda) {
    if (!(lambda >= 0)) throw std::invalid_argument("lambda must be nonnegative");
    return {lambda * std::exp(-lambda), -std::expm1(-lambda)};
}

}  // namespace txcap
