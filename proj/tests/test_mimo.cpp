#include "doctest.h"
#include "oracle.hpp"

#include "txcap/extensions.hpp"
#include "txcap/mimo.hpp"

#include <cmath>
#include <stdexcept>

using namespace txcap;

namespace {

NetworkParams net(double lambda, double alpha = 4.0, double tau = 5.0) {
    NetworkParams p;
    p.lambda = lambda;
    p.alpha = alpha;
    p.tau = tau;
    return p;
}

AntennaConfig ant(int n_t, int n_r, int K = 1, double z = 0) {
    AntennaConfig a;
    a.n_t = n_t;
    a.n_r = n_r;
    a.K = K;
    a.z = z;
    return a;
}

}  // namespace

TEST_CASE("mrc") {
    for (double alpha : {3.0, 4.0, 6.0}) {
        const double delta = 2 / alpha;
        CHECK(c_alpha(alpha) == doctest::Approx(M_PI * oracle::gamma(1 + delta) * oracle::gamma(1 - delta)).epsilon(1e-12));
        // Partial sums of (-delta)_k / k! telescope to Gamma(n - delta) / (Gamma(1 - delta) Gamma(n)).
        for (int n = 1; n <= 32; ++n)
            CHECK(mrc_factor(n, delta) ==
                  doctest::Approx(oracle::gamma(n - delta) / (oracle::gamma(1 - delta) * oracle::gamma(n))).epsilon(1e-11));
        // One antenna is the Rayleigh single-antenna asymptote.
        const NetworkParams p = net(1e-3, alpha);
        const FadingAsymptotic r =
            op_tc_fading_asymptotic(p, FadeDistribution::rayleigh(), FadeDistribution::rayleigh(), 0.05);
        CHECK(std::fabs(mrc_op(p, ant(1, 1)) - r.op) <= 1e-12 * r.op);
        CHECK(std::fabs(mrc_tc(p, ant(1, 1), 0.05).tc - r.tc) <= 1e-12 * r.tc);
        for (int n = 1; n <= 32; ++n) {
            const MrcTc m = mrc_tc(p, ant(1, n), 0.05);
            CHECK(m.lb_holds);
            CHECK(m.ub_holds);
        }
        // Slope of log TC in log n_r approaches delta.
        const double s = std::log(mrc_tc(p, ant(1, 4096), 0.05).tc / mrc_tc(p, ant(1, 2048), 0.05).tc) / std::log(2.0);
        CHECK(s == doctest::Approx(delta).epsilon(1e-3));
    }
    CHECK_THROWS_AS(mrc_op(net(0.01), ant(1, 0)), std::invalid_argument);
}

TEST_CASE("eigen-beamforming density") {
    const NetworkParams p = net(0);
    const double den = c_alpha(4.0) * std::sqrt(5.0);
    const IntensityBounds b = eigenbf_ocd_bounds(p, ant(1, 1), 0.1);
    CHECK(b.lb == doctest::Approx(0.1 / den).epsilon(1e-14));
    CHECK(b.ub == doctest::Approx(std::sqrt(M_PI) * 0.1 / den).epsilon(1e-14));
    const IntensityBounds m = eigenbf_ocd_bounds(p, ant(4, 2), 0.1);
    CHECK(m.lb == doctest::Approx(2 * 0.1 / den).epsilon(1e-14));
    CHECK(m.ub == doctest::Approx(std::sqrt(M_PI) * std::sqrt(8.0) * 0.1 / den).epsilon(1e-14));
}

TEST_CASE("partial zero forcing") {
    const NetworkParams p = net(1e-3);
    const PzfBounds b = pzf_bounds(p, ant(1, 12, 1, 5), 0.05);
    CHECK(b.op_ub_feasible);
    CHECK(b.tc_lb_feasible);
    CHECK(b.theta_star == 0.5);
    CHECK(b.op_ub == doctest::Approx(5.0 * std::pow(M_PI * 1e-3, 2) / 1.0 * std::pow(3.0, -1.0) / 6.0).epsilon(1e-13));
    CHECK(b.tc_lb == doctest::Approx(std::sqrt(0.05 / 5) / M_PI * std::sqrt(6.0) * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(b.tc_lb <= b.tc_ub);
    // Outside the feasible window the bounds are NaN.
    const PzfBounds n = pzf_bounds(p, ant(1, 4, 1, 2), 0.05);
    CHECK_FALSE(n.op_ub_feasible);
    CHECK(std::isnan(n.tc_lb));
    // Asymptotic linear growth along z = theta* n_r.
    auto tc = [&](int n) { return pzf_bounds(p, ant(1, n, 1, n / 2), 0.05).tc_lb; };
    CHECK(std::log(tc(1 << 16) / tc(1 << 15)) / std::log(2.0) == doctest::Approx(1.0).epsilon(1e-3));
    // z* beats its other neighbour.
    const PzfBounds z = pzf_bounds(p, ant(1, 20, 1, 3), 0.05);
    CHECK(std::abs(z.z_star - 10) <= 1);
    CHECK_THROWS_AS(pzf_bounds(p, ant(1, 4, 1, 4), 0.05), std::invalid_argument);
    CHECK_THROWS_AS(pzf_bounds(p, ant(1, 4, 1, 1), 0.05, 1), std::invalid_argument);
}

TEST_CASE("receiver upper bounds") {
    const NetworkParams p = net(0);
    const double den = M_PI * std::sqrt(5.0) * std::sqrt(0.9);
    CHECK(mmse_tc_ub(p, 3, 0.1) == doctest::Approx(9.0 / den).epsilon(1e-14));
    CHECK(mrc_tc_ub(p, 1, 0.1) == doctest::Approx(zf_tc_ub(p, 1, 0.1)).epsilon(1e-14));
    CHECK(mrc_tc_ub(p, 4, 0.1) == doctest::Approx(4.0 / den * 2).epsilon(1e-14));
    CHECK(zf_tc_ub(p, 4, 0.1) == doctest::Approx(2.5 / den * 2).epsilon(1e-14));
    // PZF at z = 0 and z = n_r - 1 with l = 2 reproduces the two closed forms.
    for (int n : {2, 4, 8}) {
        CHECK(pzf_bounds(p, ant(1, n, 1, 0), 0.1).tc_ub == doctest::Approx(mrc_tc_ub(p, n, 0.1)).epsilon(1e-12));
        CHECK(pzf_bounds(p, ant(1, n, 1, n - 1), 0.1).tc_ub * n ==
              doctest::Approx((n + 1.0 + 2.0) / den * n).epsilon(1e-12));
    }
}

TEST_CASE("spatial multiplexing") {
    const NetworkParams p = net(0.01, 4.0, 1.0);
    CHECK(sm_optimal_streams(p, ant(4, 4), SmReceiver::blast_d).raw == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(sm_optimal_streams(p, ant(4, 4), SmReceiver::blast_d).rounded == 4);
    CHECK(sm_optimal_streams(p, ant(8, 6), SmReceiver::zf).raw == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(sm_optimal_streams(p, ant(8, 6), SmReceiver::mrc).rounded == 3);
    CHECK(sm_receiver_from_string("zf") == SmReceiver::zf);
    CHECK_THROWS_AS(sm_receiver_from_string("foo"), std::invalid_argument);
    CHECK(vblast_dblast_ratio(4.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(vblast_dblast_ratio(4.0 - 1e-9) == doctest::Approx(vblast_dblast_ratio(4.0 + 1e-9)).epsilon(1e-8));
    CHECK(vblast_dblast_ratio(3.0) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
}

TEST_CASE("sdma constants") {
    for (double delta : {0.4, 0.5, 2.0 / 3.0})
        for (int d : {1, 2, 3, 6, 12}) {
            double s = 0;
            for (int j = 1; j <= d; ++j) s += (j % 2 ? 1 : -1) * gsl_sf_choose(d, j) * std::pow(j, delta);
            CHECK(sdma_f(d, delta) == doctest::Approx(1 / s).epsilon(1e-9));
            CHECK(sdma_f_direct(d, delta) == doctest::Approx(1 / s).epsilon(1e-9));  // the double-precision oracle cancels at d = 12
        }
    // E[h^delta] for h ~ Gamma(K, 1) against a quadrature.
    for (int K : {1, 2, 4}) {
        const double m = oracle::quad_inf([&](double h) { return std::sqrt(h) * gsl_ran_gamma_pdf(h, K, 1.0); }, 0.0);
        CHECK(sdma_j(K, 0.5) == doctest::Approx(M_PI * oracle::gamma(0.5) * m).epsilon(1e-9));
    }
    // The finite-sum form agrees at K = 1 only.
    CHECK(sdma_j_sum(1, 4.0) == doctest::Approx(sdma_j(1, 0.5)).epsilon(1e-12));
    CHECK(sdma_j_sum(2, 4.0) != doctest::Approx(sdma_j(2, 0.5)).epsilon(1e-3));

    SdmaCluster c;
    c.u_min = 0.5;
    c.u_max = 1.0;
    const SdmaBounds b = sdma_dpc_tc_bounds(net(0), c, ant(4, 4, 2), 0.05);
    CHECK(b.diversity == 12);
    CHECK(b.lb <= b.ub);
    CHECK(b.k_star_lb == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(b.k_star_ub == doctest::Approx(2.5).epsilon(1e-14));
    CHECK_THROWS_AS(sdma_dpc_tc_bounds(net(0), c, ant(4, 1, 2), 0.05), std::invalid_argument);
    c.u_min = 2.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
