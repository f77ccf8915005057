#include "txcap/shotnoise.hpp"

#include "txcap/numeric.hpp"
#include "txcap/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace txcap {

SnSpec::SnSpec(int dim, double lambda, double alpha_, double eps) : d(dim), intensity(lambda), alpha(alpha_), epsilon(eps) {
    validate();
}

void SnSpec::validate() const {
    ball_coeff(d);
    if (!(intensity >= 0)) throw std::invalid_argument("intensity must be nonnegative");
    if (!(alpha > d)) throw std::invalid_argument("alpha must exceed d");
    if (!(epsilon >= 0)) throw std::invalid_argument("epsilon must be nonnegative");
}

// ---- Levy -------------------------------------------------------------------

namespace {
void check_levy(double gamma, double x) {
    if (!(gamma > 0)) throw std::invalid_argument("Levy parameter gamma must be positive");
    if (!(x > 0)) throw std::invalid_argument("Levy argument must be positive");
}
}  // namespace

double levy_cdf(double gamma, double x) {
    check_levy(gamma, x);
    return std::erfc(std::sqrt(gamma / (2.0 * x)));
}

double levy_ccdf(double gamma, double x) {
    check_levy(gamma, x);
    return std::erf(std::sqrt(gamma / (2.0 * x)));
}

double levy_pdf(double gamma, double x) {
    check_levy(gamma, x);
    return std::sqrt(gamma / (2.0 * pi)) * std::exp(-gamma / (2.0 * x)) / std::pow(x, 1.5);
}

// ---- stable dispersion ---------------------------------------------------

StableParams stable_dispersion(const SnSpec& spec, double fade_delta_moment) {
    spec.validate();
    if (spec.epsilon != 0) throw std::invalid_argument("stable dispersion needs epsilon = 0");
    const double delta = spec.delta();
    if (!(delta < 1)) throw std::invalid_argument("delta must be below 1");
    const double base = spec.intensity * ball_coeff(spec.d) * fade_delta_moment * gamma_fn(1.0 - delta) *
                        std::cos(pi * delta / 2.0);
    return {delta, std::pow(base, 1.0 / delta)};
}

StableParams stable_dispersion_one_sided(double delta, double fade_delta_moment) {
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
    const double base = gamma_fn(2.0 - delta) / (1.0 - delta) * std::cos(pi * delta / 2.0) * fade_delta_moment;
    return {delta, std::pow(base, 1.0 / delta)};
}

// ---- series ------------------------------------------------------------------

namespace {

double series_arg(double lambda_1d, double delta, double m, double y) {
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
    if (!(y > 0)) throw std::invalid_argument("series level y must be positive");
    if (!(lambda_1d >= 0)) throw std::invalid_argument("intensity must be nonnegative");
    const double x = 2.0 * lambda_1d * gamma_fn(1.0 - delta) * m * std::pow(y, -delta);
    if (!(x < 1.0)) throw std::domain_error("series unreliable: argument " + std::to_string(x) + " >= 1");
    return x;
}

// |n-th term| without the sine factor.
double term_envelope(int n, double delta, double x) {
    if (x == 0) return 0.0;
    return std::exp(log_gamma(1.0 + n * delta) - std::log(static_cast<double>(n)) - log_gamma(n + 1.0) +
                    n * std::log(x)) /
           (pi * delta);
}

SeriesValue series_sum(double delta, double x, int n_terms) {
    double sum = 0.0, abs_sum = 0.0;
    for (int n = 1; n <= n_terms; ++n) {
        const double t = ((n % 2) ? 1.0 : -1.0) * term_envelope(n, delta, x) * std::sin(pi * n * delta);
        sum += t;
        abs_sum += std::fabs(t);
    }
    // Omitted tail: sum the envelopes until they stop mattering.
    double tail = 0.0;
    for (int n = n_terms + 1; n < n_terms + 2000; ++n) {
        const double e = term_envelope(n, delta, x);
        tail += e;
        if (e <= 1e-18 * (tail + std::fabs(sum)) || e == 0.0) break;
    }
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * (abs_sum + std::fabs(sum));
    return {sum, tail + rounding, n_terms};
}

}  // namespace

SeriesValue sn_ccdf_series(double lambda_1d, double delta, double fade_delta_moment, double y, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("series needs at least one term");
    return series_sum(delta, series_arg(lambda_1d, delta, fade_delta_moment, y), n_terms);
}

SeriesValue sn_ccdf_series_auto(double lambda_1d, double delta, double fade_delta_moment, double y, double tol) {
    const double x = series_arg(lambda_1d, delta, fade_delta_moment, y);
    int n = 1;
    while (n < 400 && term_envelope(n + 1, delta, x) > 0.1 * tol) ++n;
    return series_sum(delta, x, n);
}

SeriesValue sn_ccdf_mapped(const SnSpec& spec, double fade_delta_moment, double y) {
    spec.validate();
    const double delta = spec.delta();
    const double scale = std::pow(0.5 * spec.intensity * ball_coeff(spec.d), 1.0 / delta);
    return sn_ccdf_series_auto(1.0, delta, fade_delta_moment, y / scale);
}

// ---- max shot noise ------------------------------------------------------

double max_sn_cdf(const SnSpec& spec, double y) {
    spec.validate();
    if (!(y >= 0)) throw std::invalid_argument("level y must be nonnegative");
    if (y == 0) return spec.epsilon > 0 || spec.intensity > 0 ? 0.0 : 1.0;
    if (spec.epsilon > 0 && y >= std::pow(spec.epsilon, -spec.alpha)) return 1.0;
    const double cd = ball_coeff(spec.d);
    return std::exp(-spec.intensity * cd * (std::pow(y, -spec.delta()) - std::pow(spec.epsilon, spec.d)));
}

Moment frechet_moment(const SnSpec& spec, double p) {
    spec.validate();
    const double delta = spec.delta();
    if (!(p < delta)) return {inf, false};
    const double sigma = std::pow(spec.intensity * ball_coeff(spec.d), 1.0 / delta);
    return {std::pow(sigma, p) * gamma_fn(1.0 - p / delta), true};
}

MeanVar sn_mean_var(const SnSpec& spec) {
    spec.validate();
    const double k = spec.intensity * spec.d * ball_coeff(spec.d);
    MeanVar mv{{inf, false}, {inf, false}};
    if (spec.epsilon > 0) {
        mv.mean = {k / (spec.alpha - spec.d) * std::pow(spec.epsilon, spec.d - spec.alpha), true};
        mv.variance = {k / (2.0 * spec.alpha - spec.d) * std::pow(spec.epsilon, spec.d - 2.0 * spec.alpha), true};
    }
    return mv;
}

// ---- MGF ---------------------------------------------------------------------

double sn_log_mgf_capped(const SnSpec& spec, double theta, double y_max) {
    spec.validate();
    if (!(theta >= 0)) throw std::invalid_argument("theta must be nonnegative");
    if (!(y_max > 0)) throw std::invalid_argument("cap must be positive");
    if (theta == 0) return 0.0;
    const double delta = spec.delta();
    // y = y_max s keeps the exponent bounded by theta y_max.
    const double a = theta * y_max;
    // expm1(a s) / s stays finite as s -> 0; s^-delta alone cannot overflow.
    auto f = [a, delta](double s) {
        if (!(s > 0)) return 0.0;
        const double x = a * s;
        const double ratio = x < 1e-8 ? a * (1.0 + 0.5 * x) : std::expm1(x) / s;
        return ratio * std::pow(s, -delta);
    };
    const double integral = num::integrate_singular(f, 0.0, 1.0);
    return spec.intensity * spec.d * ball_coeff(spec.d) / spec.alpha * std::pow(y_max, -delta) * integral;
}

double sn_mgf_truncated(const SnSpec& spec, double theta) {
    if (!(spec.epsilon > 0)) throw std::invalid_argument("truncated MGF needs epsilon > 0");
    return std::exp(sn_log_mgf_capped(spec, theta, std::pow(spec.epsilon, -spec.alpha)));
}

// ---- single BPP point --------------------------------------------------------

double bpp_interference_ccdf(double P, double R, int d, double alpha, double y) {
    if (!(P > 0 && R > 0 && alpha > d)) throw std::invalid_argument("need P, R > 0 and alpha > d");
    if (y <= P * std::pow(R, -alpha)) return 1.0;
    return std::pow(P / y, d / alpha) / std::pow(R, d);
}

double bpp_interference_pdf(double P, double R, int d, double alpha, double y) {
    if (y <= P * std::pow(R, -alpha)) return 0.0;
    return (d / alpha) * bpp_interference_ccdf(P, R, d, alpha, y) / y;
}

}  // namespace txcap
