#include "doctest.h"
#include "oracle.hpp"

#include "txcap/montecarlo.hpp"

#include <gsl/gsl_sf_erf.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace txcap;

namespace {

SimConfig sim(SimModel m, double lambda, double tau = 5.0, long long trials = 20000) {
    SimConfig c;
    c.model = m;
    c.net.lambda = lambda;
    c.net.tau = tau;
    c.trials = trials;
    c.seed = 17;
    return c;
}

void check_3sigma(const EmpiricalEstimate& e, double truth) {
    CAPTURE(e.mean);
    CAPTURE(truth);
    CHECK(std::fabs(oracle::zscore(e.mean, truth, e.trials)) <= 3.0);
}

// Rayleigh-marked planar interference at alpha = 4 has E[exp(-s I)] = exp(-a s^1/2).
double rayleigh_a(double lambda) { return lambda * M_PI * oracle::gamma(1.5) * oracle::gamma(0.5); }

}  // namespace

TEST_CASE("window rule") {
    SimConfig c = sim(SimModel::basic, 0.05);
    const double R = sim_window_radius(c);
    const double need = std::sqrt(0.05 * 2 * M_PI / (2 * 1e-3 * 0.2));
    CHECK(R == doctest::Approx(std::max(need, 3.0)).epsilon(1e-12));
    const EmpiricalEstimate e = estimate_op(c);
    CHECK(e.window_radius == R);
    CHECK(e.bias_bound <= 1e-3 * (1 + 1e-12));
    // The tail mean is lambda c_d d / (alpha - d) R^(d - alpha).
    CHECK(e.bias_bound == doctest::Approx(0.05 * M_PI * 2 / 2 / (R * R) / 0.2).epsilon(1e-12));
}

TEST_CASE("basic model against the closed form") {
    for (double l : {0.01, 0.05}) {
        const EmpiricalEstimate e = estimate_op(sim(SimModel::basic, l));
        check_3sigma(e, 2 * oracle::phi(std::sqrt(M_PI / 2 / 0.2) * M_PI * l) - 1);
        CHECK(e.count == std::llround(e.mean * e.trials));
        CHECK(e.half_width == doctest::Approx(oracle::phi_inv(0.995) * std::sqrt(e.mean * (1 - e.mean) / e.trials)).epsilon(1e-6));
    }
}

TEST_CASE("fading, mrc and fts against Laplace-transform oracles") {
    const double s = 5.0;
    SUBCASE("rayleigh") {
        const EmpiricalEstimate e = estimate_op(sim(SimModel::fading, 0.02));
        check_3sigma(e, 1 - std::exp(-rayleigh_a(0.02) * std::sqrt(s)));
    }
    SUBCASE("mrc with two branches") {
        SimConfig c = sim(SimModel::mrc, 0.03);
        c.n_r = 2;
        const double x = rayleigh_a(0.03) * std::sqrt(s);
        check_3sigma(estimate_op(c), 1 - std::exp(-x) * (1 + 0.5 * x));
    }
    SUBCASE("fts with a fade threshold") {
        SimConfig c = sim(SimModel::fts, 0.0);
        c.lambda_pot = 0.05;
        c.h_hat = 0.4;
        // Levy interference with gamma = (pi / 2) (lambda^ c_d E[sqrt h])^2, signal h > h^.
        const double lh = 0.05 * std::exp(-0.4);
        const double g = M_PI / 2 * std::pow(lh * M_PI * oracle::gamma(1.5), 2);
        const double succ = oracle::quad_inf(
            [&](double h) { return gsl_sf_erfc(std::sqrt(g * s / (2 * h))) * std::exp(-(h - 0.4)); }, 0.4);
        check_3sigma(estimate_op(c), 1 - succ);
    }
    SUBCASE("fpc at f = 0 is plain rayleigh") {
        const EmpiricalEstimate e = estimate_op(sim(SimModel::fpc, 0.02));
        check_3sigma(e, 1 - std::exp(-rayleigh_a(0.02) * std::sqrt(s)));
    }
}

TEST_CASE("vld, ic and multihop") {
    SUBCASE("nearest-neighbour links") {
        SimConfig c = sim(SimModel::vld, 0.02);
        c.link = LinkDistanceLaw::nearest_neighbor(1.0, 2);
        const double truth = oracle::quad_inf(
            [](double u) {
                return std::erf(std::sqrt(M_PI / 2) * u * u * std::sqrt(5.0) * M_PI * 0.02 / std::sqrt(2.0)) * 2 * M_PI *
                       u * std::exp(-M_PI * u * u);
            },
            0.0);
        check_3sigma(estimate_op(c), truth);
    }
    SUBCASE("no cancellation is the basic model") {
        SimConfig c = sim(SimModel::ic, 0.03);
        c.K = 0;
        check_3sigma(estimate_op(c), 2 * oracle::phi(std::sqrt(M_PI / 2 / 0.2) * M_PI * 0.03) - 1);
        // Full cancellation of every point that clears P_min cannot raise outage.
        SimConfig k = c;
        k.K = 3;
        k.kappa = 0.0;
        CHECK(estimate_op(k).mean <= estimate_op(c).mean);
    }
    SUBCASE("multihop attempts") {
        SimConfig c = sim(SimModel::multihop, 0.0, 1.0, 5000);
        c.multihop.U = 10;
        c.multihop.lambda = 0.002;
        c.multihop.M = 3;
        c.multihop.A = 6;
        const double q = multihop_hop_op(c.multihop, 3);
        const double done = gsl_cdf_negative_binomial_P(3, 1 - q, 3);
        check_3sigma(estimate_op(c), 1 - done);
    }
}

TEST_CASE("capacity estimate") {
    SimConfig c = sim(SimModel::basic, 0.0, 5.0, 20000);
    const EmpiricalEstimate t = estimate_tc(c, 0.1);
    NetworkParams p;
    p.tau = 5.0;
    const double truth = tc_exact_half(p, 0.1);
    CHECK(t.half_width > 0);
    CHECK(std::fabs(t.mean - truth) <= t.half_width + 1e-3 * truth);
}

TEST_CASE("determinism and worker independence") {
    SimConfig c = sim(SimModel::fading, 0.02, 5.0, 10000);
    c.workers = 1;
    const EmpiricalEstimate a = estimate_op(c);
    c.workers = 3;
    const EmpiricalEstimate b = estimate_op(c);
    CHECK(a.count == b.count);
    CHECK(a.plan == b.plan);
    CHECK(estimate_op(c).count == b.count);
    c.seed = 18;
    CHECK(estimate_op(c).count != b.count);
    CHECK(sim_workers(c, 2) <= 2);
}

TEST_CASE("sum versus max") {
    const SnSpec spec(2, 0.1, 4.0);
    const std::vector<double> ys{1.0, 10.0, 100.0};
    const SumMaxResult r = estimate_sum_max_ratio(spec, ys, 20000, 5, 1e-3, 0.99, 1);
    REQUIRE(r.rows.size() == 3);
    for (const SumMaxRow& row : r.rows) {
        CHECK(row.p_sum >= row.p_max);
        CHECK(std::fabs(oracle::zscore(row.p_max, 1 - max_sn_cdf(spec, row.y), 20000)) <= 3.0);
    }
    CHECK(std::is_sorted(r.max_samples.begin(), r.max_samples.end()));
    CHECK(ks_statistic(r.max_samples, [&](double y) { return max_sn_cdf(spec, y); }) < 1.63);
    const SumMaxResult again = estimate_sum_max_ratio(spec, ys, 20000, 5, 1e-3, 0.99, 2);
    CHECK(again.max_samples == r.max_samples);
    // A perfect sample has a small KS distance.
    std::vector<double> u(1000);
    for (int i = 0; i < 1000; ++i) u[i] = (i + 0.5) / 1000;
    CHECK(ks_statistic(u, [](double x) { return x; }) == doctest::Approx(0.5 / std::sqrt(1000.0)).epsilon(1e-12));
}

TEST_CASE("configuration errors") {
    SimConfig c = sim(SimModel::basic, 0.1);
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = sim(SimModel::fpc, 0.1);
    c.f = 1.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = sim(SimModel::vld, 0.1);
    c.link = LinkDistanceLaw::nearest_neighbor(1.0, 3);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_THROWS_AS(sim_model_from_string("nope"), std::invalid_argument);
    CHECK(sim_model_from_string("multihop") == SimModel::multihop);
    CHECK_THROWS_AS(estimate_tc(sim(SimModel::basic, 0.0), 1.5), std::invalid_argument);
}
