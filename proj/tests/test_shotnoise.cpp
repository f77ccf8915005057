#include "doctest.h"
#include "oracle.hpp"

#include "txcap/pointproc.hpp"
#include "txcap/shotnoise.hpp"
#include "txcap/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace txcap;

TEST_CASE("levy law") {
    const double g = 1.7;
    CHECK(levy_cdf(g, g) == doctest::Approx(2 * (1 - oracle::phi(1.0))).epsilon(1e-13));
    CHECK(levy_cdf(g, g) == doctest::Approx(0.31731).epsilon(1e-4));
    CHECK(levy_cdf(g, 1e12) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(levy_ccdf(g, 3.0) + levy_cdf(g, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double x : {0.01 * g, 0.3 * g, g, 10 * g, 100 * g}) {
        const double integral = oracle::quad([&](double t) { return levy_pdf(g, t); }, 0.0, x);
        CHECK(integral == doctest::Approx(levy_cdf(g, x)).epsilon(1e-6));
        CHECK(levy_pdf(g, x) == doctest::Approx(std::sqrt(g / (2 * M_PI)) * std::exp(-g / (2 * x)) * std::pow(x, -1.5))
                                    .epsilon(1e-13));
    }
    CHECK_THROWS_AS(levy_cdf(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(levy_cdf(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("stable dispersion") {
    const StableParams s = stable_dispersion(SnSpec(1, 1.0, 2.0));
    CHECK(s.delta == 0.5);
    CHECK(std::fabs(s.gamma - 2 * M_PI) <= 1e-12);
    // delta = 1/2 with fading: (pi/2) (lambda c_d E[sqrt h])^2.
    const double m = oracle::gamma(1.5);
    const StableParams f = stable_dispersion(SnSpec(2, 0.3, 4.0), m);
    CHECK(f.gamma == doctest::Approx(M_PI / 2 * std::pow(0.3 * M_PI * m, 2)).epsilon(1e-13));
    const SnSpec spec(3, 0.7, 5.0);
    CHECK(stable_dispersion(spec, 1.0).gamma == doctest::Approx(stable_dispersion(spec).gamma).epsilon(1e-12));
    CHECK_THROWS_AS(stable_dispersion(SnSpec(2, 1.0, 4.0, 0.5)), std::invalid_argument);
    // The alternative one-sided constant is a distinct, finite number.
    const StableParams alt = stable_dispersion_one_sided(0.5);
    CHECK(std::isfinite(alt.gamma));
    CHECK(alt.gamma > 0);
}

TEST_CASE("shot-noise series") {
    // One term is the asymptote 2 lambda E[h^delta] y^-delta.
    for (double d : {0.3, 0.5, 0.8}) {
        const SeriesValue v = sn_ccdf_series(1.0, d, 1.2, 500.0, 1);
        CHECK(v.value == doctest::Approx(2 * 1.2 * std::pow(500.0, -d)).epsilon(1e-12));
    }
    // delta = 1/2 against the Levy closed form with gamma = 2 pi.
    for (double y : {140.0, 300.0, 1e3, 1e4, 1e6}) {
        CAPTURE(y);
        const SeriesValue v = sn_ccdf_series_auto(1.0, 0.5, 1.0, y);
        CHECK(std::fabs(v.value - levy_ccdf(2 * M_PI, y)) <= 1e-6 * levy_ccdf(2 * M_PI, y));
        CHECK(std::fabs(v.value - levy_ccdf(2 * M_PI, y)) <= v.error_bound + 1e-15);
    }
    CHECK_THROWS_AS(sn_ccdf_series(1.0, 0.5, 1.0, 1.0, 10), std::domain_error);
}

TEST_CASE("mapped planar shot noise") {
    const SnSpec spec(2, 0.1, 4.0);
    const double g = stable_dispersion(spec).gamma;
    for (double y : {5.0, 20.0, 100.0}) {
        const SeriesValue v = sn_ccdf_mapped(spec, 1.0, y);
        CHECK(std::fabs(v.value - levy_ccdf(g, y)) <= v.error_bound + 1e-12);
    }
    // Empirical check at y = 5 with a window sized for a tiny tail.
    const int n = 40000;
    const double y = 5.0, R = 30.0;
    Rng rng(RngStream{3, 0});
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (double r : sample_ppp(0.1, Window(2, 0.0, R), rng).points) s += std::pow(r, -4.0);
        hits += s > y ? 1 : 0;
    }
    CHECK(std::fabs(oracle::zscore(double(hits) / n, sn_ccdf_mapped(spec, 1.0, y).value, n)) <= 3.0);
}

TEST_CASE("max shot noise") {
    const SnSpec spec(2, 0.5, 4.0);
    CHECK(max_sn_cdf(spec, 1e15) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(max_sn_cdf(spec, 2.0) == doctest::Approx(std::exp(-0.5 * M_PI / std::sqrt(2.0))).epsilon(1e-14));
    const SnSpec trunc(2, 0.5, 4.0, 0.8);
    CHECK(max_sn_cdf(trunc, std::pow(0.8, -4.0) * 1.01) == 1.0);
    CHECK(max_sn_cdf(trunc, 2.0) == doctest::Approx(std::exp(-0.5 * M_PI * (1 / std::sqrt(2.0) - 0.64))).epsilon(1e-14));
    // Frechet moments by quadrature; with t = y^-delta the law of t is Exp(lambda c_d).
    const double a = 0.5 * M_PI;
    for (double p : {0.1, 0.25, 0.4}) {
        const Moment m = frechet_moment(spec, p);
        REQUIRE(m.finite);
        auto f = [&](double t) { return std::pow(t, -p / 0.5) * a * std::exp(-a * t); };
        const double q = oracle::quad(f, 0.0, 1.0) + oracle::quad_inf(f, 1.0);
        CHECK(m.value == doctest::Approx(q).epsilon(1e-8));
    }
    CHECK_FALSE(frechet_moment(spec, 0.5).finite);
}

TEST_CASE("shot-noise moments") {
    const MeanVar inf_mv = sn_mean_var(SnSpec(2, 1.0, 4.0));
    CHECK_FALSE(inf_mv.mean.finite);
    CHECK_FALSE(inf_mv.variance.finite);
    const MeanVar mv = sn_mean_var(SnSpec(2, 1.0, 4.0, 1.0));
    REQUIRE(mv.mean.finite);
    CHECK(mv.mean.value == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(mv.variance.value == doctest::Approx(2 * M_PI / 6).epsilon(1e-14));
    // Empirical truncated mean, window [1, 20]; the tail mean beyond 20 is added back.
    const int n = 20000;
    Rng rng(RngStream{9, 0});
    double s = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
        double v = 0;
        for (double r : sample_ppp(1.0, Window(2, 1.0, 20.0), rng).points) v += std::pow(r, -4.0);
        s += v;
        s2 += v * v;
    }
    const double tail = M_PI / 400.0;
    CHECK(std::fabs(s / n + tail - mv.mean.value) <= 3 * std::sqrt(mv.variance.value / n));
}

TEST_CASE("truncated MGF") {
    const SnSpec spec(2, 0.4, 4.0, 0.9);
    CHECK(sn_mgf_truncated(spec, 0.0) == 1.0);
    const double h = 1e-6;
    const double deriv = (sn_mgf_truncated(spec, h) - sn_mgf_truncated(spec, 0.0)) / h;
    CHECK(deriv == doctest::Approx(sn_mean_var(spec).mean.value).epsilon(1e-4));
    // Independent quadrature of the exponent.
    const double cap = std::pow(0.9, -4.0);
    for (double th : {0.1, 0.5, 2.0}) {
        const double e = oracle::quad([&](double y) { return std::expm1(th * y) * std::pow(y, -1.5); }, 0.0, cap);
        CHECK(std::log(sn_mgf_truncated(spec, th)) == doctest::Approx(0.4 * 2 * M_PI / 4 * e).epsilon(1e-9));
    }
    double prev_slope = -INFINITY;
    for (double th = 0.05; th < 3; th += 0.25) {
        const double slope = (std::log(sn_mgf_truncated(spec, th + 0.01)) - std::log(sn_mgf_truncated(spec, th))) / 0.01;
        CHECK(slope >= prev_slope);
        prev_slope = slope;
    }
    CHECK_THROWS_AS(sn_mgf_truncated(SnSpec(2, 1.0, 4.0), 0.1), std::invalid_argument);
}

TEST_CASE("binomial point interference is subexponential") {
    const double P = 1.0, R = 2.0, alpha = 4.0;
    for (double y : {1.0, 10.0, 1e3, 1e6}) {
        const double hz = bpp_interference_pdf(P, R, 2, alpha, y) / bpp_interference_ccdf(P, R, 2, alpha, y);
        CHECK(y * hz == doctest::Approx(0.5).epsilon(1e-12));
    }
    CHECK(bpp_interference_ccdf(P, R, 2, alpha, 1e-3) == 1.0);
}
