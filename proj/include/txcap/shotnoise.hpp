#pragma once

namespace txcap {

// Power-law shot noise with guard radius epsilon.
struct SnSpec {
    int d = 2;
    double intensity = 1.0;
    double alpha = 4.0;
    double epsilon = 0.0;

    SnSpec() = default;
    SnSpec(int dim, double lambda, double alpha_, double eps = 0.0);
    double delta() const { return d / alpha; }
    void validate() const;
};

struct StableParams {
    double delta;
    double gamma;
};

// Moment that may be infinite; value is +inf when finite == false.
struct Moment {
    double value;
    bool finite;
};

struct SeriesValue {
    double value;
    double error_bound;
    int terms;
};

double levy_cdf(double gamma, double x);
double levy_ccdf(double gamma, double x);
double levy_pdf(double gamma, double x);

// gamma = (lambda c_d E[h^delta] Gamma(1-delta) cos(pi delta / 2))^(1/delta); needs epsilon = 0.
StableParams stable_dispersion(const SnSpec& spec, double fade_delta_moment = 1.0);
// The alternative one-sided constant for the unit-rate 1-D process, kept for comparison.
StableParams stable_dispersion_one_sided(double delta, double fade_delta_moment = 1.0);

// Series of the CCDF of the 1-D shot noise at intensity lambda_1d. Throws
// std::domain_error when 2 lambda Gamma(1-delta) E[h^delta] y^-delta >= 1.
SeriesValue sn_ccdf_series(double lambda_1d, double delta, double fade_delta_moment, double y, int n_terms);
// Same, with the term count chosen so the bound drops below tol.
SeriesValue sn_ccdf_series_auto(double lambda_1d, double delta, double fade_delta_moment, double y,
                                double tol = 1e-14);

// CCDF of the d-dimensional shot noise via the unit 1-D mapping.
SeriesValue sn_ccdf_mapped(const SnSpec& spec, double fade_delta_moment, double y);

double max_sn_cdf(const SnSpec& spec, double y);
// E[M^p] for the Frechet law (epsilon = 0), finite only for p < delta.
Moment frechet_moment(const SnSpec& spec, double p);

struct MeanVar {
    Moment mean;
    Moment variance;
};
MeanVar sn_mean_var(const SnSpec& spec);

// MGF of the shot noise with contributions capped at epsilon^-alpha.
double sn_mgf_truncated(const SnSpec& spec, double theta);
// (lambda d c_d / alpha) * integral_0^y_max (e^{theta y} - 1) y^{-delta-1} dy.
double sn_log_mgf_capped(const SnSpec& spec, double theta, double y_max);

// Interference of one point uniform in b_d(o, R) at power P.
double bpp_interference_ccdf(double P, double R, int d, double alpha, double y);
double bpp_interference_pdf(double P, double R, int d, double alpha, double y);

}  // namespace txcap
