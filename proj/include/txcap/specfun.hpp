#pragma once

#include <limits>

namespace txcap {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double inf = std::numeric_limits<double>::infinity();

struct BallGeometry {
    int d;
    double c_d;

    explicit BallGeometry(int dim);
    double volume(double r) const;
    double annulus(double r_inner, double r_outer) const;
};

// c_1 = 2, c_2 = pi, c_3 = 4 pi / 3.
double ball_coeff(int d);
double ball_volume(int d, double r);

// Lanczos approximation, reflection below 1/2. Throws std::domain_error at poles.
double gamma_fn(double z);
// log|Gamma(z)| for z > 0.
double log_gamma(double z);

// Integral of t^{z-1} e^{-t} over [t_lo, t_hi]; t_hi may be +inf.
double incomplete_gamma(double z, double t_lo, double t_hi);

double normal_cdf(double t);
// Inverse of normal_cdf; throws std::domain_error outside (0, 1).
double normal_quantile(double p);

}  // namespace txcap
