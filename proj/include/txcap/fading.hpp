#pragma once

#include "txcap/rng.hpp"

#include <functional>
#include <vector>

namespace txcap {

// Monotone (Fritsch-Carlson) cubic interpolant of a CDF given on a grid.
// Below the first node the CDF is F[0]; above the last it is 1.
class TabulatedCdf {
public:
    TabulatedCdf() = default;
    TabulatedCdf(std::vector<double> x, std::vector<double> F);

    double cdf(double x) const;
    double pdf(double x) const;
    double quantile(double u) const;
    double lo() const { return x_.front(); }
    double hi() const { return x_.back(); }
    const std::vector<double>& nodes() const { return x_; }
    // Integral of g(x) * pdf(x) over [a, b], piecewise by segment.
    double integrate_against(const std::function<double(double)>& g, double a, double b) const;

private:
    std::vector<double> x_, F_, m_;
    std::size_t segment(double x) const;
};

class FadeDistribution {
public:
    enum class Kind { degenerate, rayleigh, tabulated };

    static FadeDistribution degenerate(double value = 1.0);
    static FadeDistribution rayleigh();
    static FadeDistribution tabulated(std::vector<double> h, std::vector<double> cdf);

    Kind kind() const { return kind_; }
    bool is_rayleigh() const { return kind_ == Kind::rayleigh; }
    bool is_degenerate() const { return kind_ == Kind::degenerate; }

    double cdf(double h) const;
    double ccdf(double h) const;
    // Density; for the degenerate law this is 0 away from the atom.
    double pdf(double h) const;

    // E[h^p]; +inf when the moment diverges.
    double frac_moment(double p) const;
    // E[h^{-p} 1{h > floor}].
    double cond_neg_moment(double p, double floor) const;
    // E[exp(-theta h^{-p})].
    double mgf_neg_power(double p, double theta) const;
    // E[g(h) 1{h > floor}]; g may be singular at floor.
    double expect_above(const std::function<double(double)>& g, double floor) const;
    // E[g(h - floor) 1{h > floor}] with h - floor formed without cancellation,
    // for g singular at 0.
    double expect_excess(const std::function<double(double)>& g, double floor) const;

    // Support used for root brackets; Rayleigh is truncated at 50.
    double support_lo() const;
    double support_hi() const;
    // h with ccdf(h) = p.
    double ccdf_inverse(double p) const;

    double sample(Rng& rng) const;
    // Draw from the law conditioned on h > floor.
    double sample_above(double floor, Rng& rng) const;

private:
    Kind kind_ = Kind::degenerate;
    double value_ = 1.0;
    TabulatedCdf table_;
};

class LinkDistanceLaw {
public:
    enum class Kind { fixed, nearest_neighbor, tabulated };

    static LinkDistanceLaw fixed(double u);
    static LinkDistanceLaw nearest_neighbor(double mu, int d);
    static LinkDistanceLaw tabulated(std::vector<double> u, std::vector<double> cdf, int d);

    Kind kind() const { return kind_; }
    int dim() const { return d_; }
    double cdf(double u) const;
    double pdf(double u) const;
    // E[u^p].
    double moment(double p) const;
    double mean() const { return moment(1.0); }
    double moment_d() const { return moment(static_cast<double>(d_)); }
    // E[exp(-theta u^d)].
    double mgf_neg_power_d(double theta) const;
    // E[g(u)].
    double expect(const std::function<double(double)>& g) const;
    double sample(Rng& rng) const;

private:
    Kind kind_ = Kind::fixed;
    int d_ = 2;
    double u_ = 1.0, mu_ = 0.0;
    TabulatedCdf table_;
};

}  // namespace txcap
