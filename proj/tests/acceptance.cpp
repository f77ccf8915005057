// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracle.hpp"

#include "txcap/basic.hpp"
#include "txcap/csv.hpp"
#include "txcap/design.hpp"
#include "txcap/extensions.hpp"
#include "txcap/mimo.hpp"
#include "txcap/montecarlo.hpp"
#include "txcap/shotnoise.hpp"
#include "txcap/specfun.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace txcap;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

NetworkParams basic_net(double lambda) {
    NetworkParams p;
    p.lambda = lambda;
    p.tau = 5.0;
    return p;
}

double sd_of(double p, long long n) { return std::sqrt(p * (1 - p) / static_cast<double>(n)); }

double round_sig(double x, int digits) {
    const double e = std::floor(std::log10(std::fabs(x))) - (digits - 1);
    return std::round(x / std::pow(10.0, e)) * std::pow(10.0, e);
}

double loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::log(x[i]), b = std::log(y[i]);
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---- criteria --------------------------------------------------------------------

void c1(Outcome& o) {
    double worst = 0;
    for (int i = 1; i <= 19; ++i) {
        const double d = 0.05 * i;
        worst = std::max(worst, std::fabs(gamma_fn(1 - d) * gamma_fn(1 + d) * std::sin(M_PI * d) / (M_PI * d) - 1));
    }
    o.detail << "max deviation " << worst;
    o.require(worst <= 1e-10, "gamma identity");
}

void c2(Outcome& o) {
    const double g = stable_dispersion(SnSpec(1, 1.0, 2.0)).gamma;
    o.detail << "gamma - 2pi = " << g - 2 * M_PI;
    o.require(std::fabs(g - 2 * M_PI) <= 1e-12, "dispersion");
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
        const double y = 150.0 * std::pow(10.0, 0.5 * i);
        const SeriesValue v = sn_ccdf_series_auto(1.0, 0.5, 1.0, y);
        const double err = std::fabs(levy_ccdf(2 * M_PI, y) - v.value);
        worst = std::max(worst, err / v.error_bound);
        o.require(err <= v.error_bound, "series at y=" + std::to_string(y));
    }
    o.detail << "; max |levy - series| / bound " << worst;
}

void c3(Outcome& o) {
    for (double l : {0.005, 0.01, 0.02, 0.05}) {
        SimConfig c;
        c.net = basic_net(l);
        c.trials = 100000;
        c.seed = 3;
        const EmpiricalEstimate e = estimate_op(c);
        const double exact = 2 * oracle::phi(std::sqrt(M_PI / 2 / 0.2) * M_PI * l) - 1;
        const double z = (e.mean - exact) / sd_of(exact, c.trials);
        const double lb = op_lb_tc_ub(c.net, 0.1).op;
        const double ub = std::min(op_ub_markov(c.net), op_ub_chernoff(c.net));
        o.detail << "lambda " << l << ": mc " << e.mean << " exact " << exact << " z " << z << " lb " << lb << " ub " << ub
                 << "; ";
        o.require(std::fabs(z) <= 3, "3 sigma");
        o.require(lb <= e.mean && e.mean <= ub, "sandwich");
    }
}

void c4(Outcome& o) {
    const TpOptimum t = tp_ub_optimum(basic_net(0));
    const TcOptimum c = tc_ub_optimum(basic_net(0));
    o.detail << "a " << t.a << " lambda* " << t.lambda_opt << " tp_max " << t.tp_max << " q* " << t.op_at_opt
             << " |tp - tc| " << std::fabs(t.tp_max - c.tc_max);
    o.require(std::fabs(t.a - std::sqrt(5.0) * M_PI) <= 1e-12 && round_sig(t.a, 5) == 7.0248, "a");
    o.require(round_sig(t.lambda_opt, 4) == 0.1424, "lambda*");
    o.require(round_sig(t.tp_max, 3) == 0.0524, "Lambda_max");
    o.require(std::fabs(t.op_at_opt - (1 - std::exp(-1.0))) <= 1e-12, "q*");
    o.require(std::fabs(t.tp_max - c.tc_max) <= 1e-9, "tp = tc");
}

void c5(Outcome& o) {
    const FadeDistribution ray = FadeDistribution::rayleigh();
    for (double l : {0.005, 0.01, 0.02, 0.05}) {
        SimConfig c;
        c.model = SimModel::fading;
        c.net = basic_net(l);
        c.trials = 100000;
        c.seed = 5;
        const EmpiricalEstimate e = estimate_op(c);
        const double exact = op_tc_rayleigh_exact(c.net, ray, 0.1).op;
        const double z = (e.mean - exact) / sd_of(exact, c.trials);
        o.detail << "lambda " << l << ": z " << z << "; ";
        o.require(std::fabs(z) <= 3, "3 sigma");
    }
    double worst = 0;
    for (double alpha : {2.5, 3.0, 4.0, 6.0}) {
        NetworkParams p = basic_net(1e-3);
        p.alpha = alpha;
        const double d = p.delta();
        const double ratio = op_tc_fading_asymptotic(p, ray, ray, 0.1).op / op_tc_asymptotic(p, 0.1).op;
        worst = std::max(worst, std::fabs(ratio - M_PI * d / std::sin(M_PI * d)));
    }
    o.detail << "ratio deviation " << worst;
    o.require(worst <= 1e-10, "pi delta / sin");
}

void c6(Outcome& o) {
    const double target[] = {1.0, 4 / M_PI, 1.4040};
    for (int d = 1; d <= 3; ++d) {
        NetworkParams p = basic_net(0.01);
        p.d = d;
        p.alpha = 2.0 * d;
        const double pen = op_tc_vld(p, LinkDistanceLaw::nearest_neighbor(1.0, d), 0.1).penalty;
        const double oracle_pen = 1 / std::pow(oracle::gamma(1 + 1.0 / d), d);
        o.detail << "d=" << d << " ratio " << pen << "; ";
        o.require(round_sig(pen, 4) == round_sig(target[d - 1], 4), "4 digits d=" + std::to_string(d));
        o.require(std::fabs(pen - oracle_pen) <= 1e-12, "oracle d=" + std::to_string(d));
    }
    double worst = 0;
    const double mu = 0.7;
    for (double l : {0.001, 0.01, 0.1, 1.0}) {
        const NetworkParams p = basic_net(l);
        const double lb = op_tc_vld(p, LinkDistanceLaw::nearest_neighbor(mu, 2), 0.1).op_lb;
        const double lt = l * std::sqrt(5.0);
        const double closed = lt / (lt + mu);
        const double mgf = oracle::quad_inf(
            [&](double u) { return std::exp(-lt * M_PI * u * u) * 2 * M_PI * mu * u * std::exp(-M_PI * mu * u * u); }, 0.0);
        worst = std::max({worst, std::fabs(lb - (1 - mgf)), std::fabs(closed - (1 - mgf))});
    }
    o.detail << "LB vs quadrature " << worst;
    o.require(worst <= 1e-8, "NN lower bound");
}

void c7(Outcome& o) {
    MultihopParams mp;
    mp.U = 10;
    mp.A = 50;
    double worst = 0;
    bool one = false, three = false;
    const double K3 = 4.0 / 9.0 * std::sqrt(3.0) * M_PI * M_PI;
    for (double alpha : {3.0, 4.0}) {
        mp.alpha = alpha;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 5; ++j) {
                mp.lambda = 1e-4 * std::pow(10.0, 2.5 * i / 9.0);
                mp.N = std::pow(10.0, -6.0 + 1.75 * j);
                if (alpha == 3.0) {
                    const double c = 1.5 * mp.N / mp.P;
                    (c * c >= 8 * std::pow(K3 * mp.lambda, 3) / 27 ? one : three) = true;
                }
                const double cf = alpha == 3.0 ? optimal_hops_closed_form3(mp) : optimal_hops_closed_form4(mp);
                worst = std::max(worst, std::fabs(cf - optimal_hops_root_numeric(mp)));
            }
    }
    o.detail << "max |closed - bisection| " << worst << " branches " << one << three << "; ";
    o.require(worst <= 1e-9, "closed forms");
    o.require(one && three, "both alpha=3 branches");
    mp.alpha = 4.0;
    mp.N = 0;
    for (int A : {6, 12})
        for (double l : {0.0005, 0.002, 0.005}) {
            mp.A = A;
            mp.lambda = l;
            const MultihopResult r = multihop_tc(mp);
            bool below = true;
            for (int M = 1; M <= A; ++M) below = below && r.ratio_exact[M - 1] <= r.ratio_ub[M - 1] * (1 + 1e-12);
            o.detail << "A=" << A << " lambda=" << l << " M* exact " << r.m_exact << " ub " << r.m_ub << "; ";
            o.require(below, "exact <= ub");
            o.require(std::abs(r.m_exact - r.m_ub) <= 1, "argmax");
        }
}

void c8(Outcome& o) {
    const double ln2 = std::log(2.0);
    bool below_throws = false;
    try {
        max_spectral_efficiency(ln2 * (1 - 1e-9));
    } catch (const std::invalid_argument&) {
        below_throws = true;
    }
    const double above = max_spectral_efficiency(ln2 * (1 + 1e-6));
    const double db = 10 * std::log10(ln2);
    o.detail << "boundary " << db << " dB; ";
    o.require(below_throws && above > 0, "existence iff ebno > ln 2");
    o.require(std::round(db * 100) / 100 == -1.59, "boundary in dB");
    double worst = 0;
    bool mono = true;
    for (double dbv : {0.0, 3.0, 10.0, 20.0}) {
        const double e = std::pow(10.0, dbv / 10);
        const double nmax = max_spectral_efficiency(e);
        double prev = INFINITY;
        for (double delta : {0.4, 0.5, 2.0 / 3.0}) {
            double best = -1, arg = 0;
            for (double nu = 1e-4; nu < nmax; nu += 1e-4) {
                const double inner = 1 / std::expm1(nu * ln2) - 1 / (e * nu);
                if (inner <= 0) break;
                const double w = nu * std::pow(inner, delta);
                if (w > best) {
                    best = w;
                    arg = nu;
                }
            }
            const double nu = optimal_spectral_efficiency(e, delta);
            worst = std::max(worst, std::fabs(nu - arg));
            mono = mono && nu < prev;
            prev = nu;
        }
    }
    double prev = 0;
    for (double dbv = -1.5; dbv <= 30; dbv += 0.5) {
        const double nu = optimal_spectral_efficiency(std::pow(10.0, dbv / 10), 0.5);
        mono = mono && nu > prev;
        prev = nu;
    }
    o.detail << "max |root - grid| " << worst;
    o.require(worst <= 1e-3, "grid agreement");
    o.require(mono, "monotone");
}

void c9(Outcome& o) {
    IcParams ic;
    ic.net = basic_net(0.025);
    ic.kappa = 0.05;
    ic.K = 3;
    ic.P_min = 1.0;
    for (double tau : {1.0, 5.0}) {
        ic.net.tau = tau;
        SimConfig c;
        c.model = SimModel::ic;
        c.net = ic.net;
        c.kappa = ic.kappa;
        c.K = ic.K;
        c.P_min = ic.P_min;
        c.trials = 100000;
        c.seed = 9;
        const EmpiricalEstimate e = estimate_op(c);
        const double q = ic_op_lb(ic);
        const double z = (q - e.mean) / sd_of(e.mean, c.trials);
        o.detail << "tau " << tau << ": q_lb " << q << " mc " << e.mean << " z " << z << "; ";
        o.require(std::fabs(z) <= 3, "3 sigma at tau=" + std::to_string(tau));
    }
    ic.net.tau = 5.0;
    bool mono = true;
    double prev = 2;
    for (int K = 0; K <= 10; ++K) {
        IcParams p = ic;
        p.K = K;
        const double q = ic_op_lb(p);
        mono = mono && q <= prev * (1 + 1e-14);
        prev = q;
    }
    prev = -1;
    for (int i = 0; i <= 20; ++i) {
        IcParams p = ic;
        p.kappa = i / 20.0;
        const double q = ic_op_lb(p);
        mono = mono && q >= prev * (1 - 1e-14);
        prev = q;
    }
    prev = -1;
    for (double pm = 1e-3; pm <= 1e3; pm *= 2) {
        IcParams p = ic;
        p.P_min = pm;
        const double q = ic_op_lb(p);
        mono = mono && q >= prev * (1 - 1e-14);
        prev = q;
    }
    // Flat stretches are equal up to rounding, hence the relative slack.
    o.require(mono, "monotone in K, kappa, P_min");
}

void c10(Outcome& o) {
    FtsParams f;
    f.net = basic_net(0);
    const double b = fts_b(f);
    double worst = 0;
    for (double lp : {0.1, 0.2, 0.5}) {
        f.lambda_pot = lp;
        const double hs = fts_optimal_threshold(f).h_hat;
        double best = -INFINITY, arg = 0;
        for (double h = 0; h <= 10; h += 1e-4) {
            const double tp = lp * std::exp(-h) * (1 - b * lp * oracle::upper_gamma(0.5, h));
            if (tp > best) {
                best = tp;
                arg = h;
            }
        }
        worst = std::max(worst, std::fabs(hs - arg));
    }
    o.detail << "b " << b << " max |h* - grid| " << worst << "; ";
    o.require(worst <= 1e-3, "threshold");
    f.lambda_pot = 0.1;
    bool order = true;
    for (int i = 1; i <= 15; ++i) {
        const TpComparison t = fts_tp_comparison(f, 0.1 * 0.05 * i);
        order = order && t.fading_unscheduled <= t.no_fading && t.no_fading <= t.fading_scheduled;
    }
    o.require(order, "FNS <= NF <= FTS");
    FpcParams p;
    p.net = basic_net(0.01);
    std::vector<double> op;
    for (int i = 0; i <= 40; ++i) {
        p.f = i / 40.0;
        op.push_back(fpc_asymptotic(p, 0.1).op);
    }
    double asym = 0;
    for (int i = 0; i <= 40; ++i) asym = std::max(asym, std::fabs(op[i] - op[40 - i]));
    const long argmin = std::min_element(op.begin(), op.end()) - op.begin();
    o.detail << "FPC asymmetry " << asym << " argmin f " << argmin / 40.0 << "; ";
    o.require(asym <= 1e-10, "FPC symmetry");
    o.require(argmin == 20, "FPC minimum at 1/2");
    bool var = true;
    for (double fv : {0.0, 0.2, 0.45, 0.499, 0.5, 0.6, 0.9})
        var = var && (std::isfinite(fpc_power_moments(1.0, fv).variance) == (fv < 0.5));
    o.require(var, "variance finite iff f < 1/2");
}

void c11(Outcome& o) {
    NetworkParams p = basic_net(1e-3);
    const FadeDistribution ray = FadeDistribution::rayleigh();
    AntennaConfig a;
    const double q = 0.05;
    const FadingAsymptotic r = op_tc_fading_asymptotic(p, ray, ray, q);
    const double dev = std::max(std::fabs(mrc_op(p, a) - r.op) / r.op, std::fabs(mrc_tc(p, a, q).tc - r.tc) / r.tc);
    o.detail << "n_R=1 deviation " << dev << "; ";
    o.require(dev <= 1e-12, "n_R = 1");
    bool sandwich = true;
    std::vector<double> n, tm, np, tp;
    for (int k = 1; k <= 32; ++k) {
        a.n_r = k;
        a.z = 0;
        const MrcTc m = mrc_tc(p, a, q);
        sandwich = sandwich && m.lb_holds && m.ub_holds;
        n.push_back(k);
        tm.push_back(m.tc);
        a.z = std::min((1 - 2 / p.alpha) * k, k - 1.0);
        const PzfBounds z = pzf_bounds(p, a, q);
        if (z.tc_lb_feasible) {
            np.push_back(k);
            tp.push_back(z.tc_lb);
        }
    }
    o.require(sandwich, "sandwich");
    const double sm = loglog_fit(n, tm), sp = loglog_fit(np, tp);
    // Local slopes at the top of the range, for the record.
    const double lm = std::log(tm[31] / tm[15]) / std::log(2.0), lp = std::log(tp.back() / tp[tp.size() / 2]) / std::log(np.back() / np[np.size() / 2]);
    o.detail << "fitted slope MRC " << sm << " (delta " << p.delta() << ", local 16-32 " << lm << ") PZF " << sp
             << " over n_R " << np.front() << ".." << np.back() << " (local " << lp << "); ";
    o.require(std::fabs(sm - p.delta()) <= 0.05, "MRC slope");
    o.require(std::fabs(sp - 1.0) <= 0.1, "PZF slope");
    for (int k : {2, 4}) {
        a.n_r = k;
        a.z = 0;
        for (double target : {0.01, 0.02}) {
            const double lam = target / (mrc_op(basic_net(1.0), a));
            SimConfig c;
            c.model = SimModel::mrc;
            c.net = basic_net(lam);
            c.n_r = k;
            c.trials = 100000;
            c.seed = 11;
            const EmpiricalEstimate e = estimate_op(c);
            const double rel = std::fabs(e.mean - target) / target;
            o.detail << "n_R=" << k << " q=" << target << " mc " << e.mean << "; ";
            o.require(rel <= 0.1, "MRC MC within 10%");
        }
    }
}

void c12(Outcome& o) {
    const SnSpec spec(2, 0.1, 4.0);
    std::vector<double> ys;
    for (int i = 0; i <= 32; ++i) ys.push_back(std::pow(10.0, 0.25 * i));
    const SumMaxResult r = estimate_sum_max_ratio(spec, ys, 1000000, 12);
    const SumMaxRow* deep = nullptr;
    for (const SumMaxRow& row : r.rows)
        if (row.exceed_max >= 100 && row.exceed_sum >= 100) deep = &row;
    o.require(deep != nullptr, "no tail point with 100 exceedances");
    if (deep) {
        o.detail << "y " << deep->y << " exceedances " << deep->exceed_sum << "/" << deep->exceed_max << " ratio "
                 << deep->ratio << "; ";
        o.require(std::fabs(deep->ratio - 1) <= 0.1, "ratio");
    }
    const double ks = ks_statistic(r.max_samples, [&](double y) { return max_sn_cdf(spec, y); });
    o.detail << "KS sqrt(n) D " << ks << " (1% critical 1.628)";
    o.require(ks < 1.628, "KS");
}

void c13(Outcome& o) {
    SimConfig c;
    c.model = SimModel::fading;
    c.net = basic_net(0.02);
    c.trials = 30000;
    c.seed = 13;
    c.workers = 1;
    const EmpiricalEstimate serial = estimate_op(c);
    c.workers = 4;
    const EmpiricalEstimate par = estimate_op(c);
    const EmpiricalEstimate again = estimate_op(c);
    auto render = [](const EmpiricalEstimate& e) {
        CurveSeries s;
        s.name = "det";
        s.x_label = "trial_count";
        s.x = {static_cast<double>(e.trials)};
        s.add_column("op", {e.mean});
        s.add_column("half_width", {e.half_width});
        s.add_meta("plan", e.plan);
        return to_csv(s) + to_meta(s);
    };
    o.require(render(serial) == render(par), "serial = parallel");
    o.require(render(par) == render(again), "repeat");
    const SnSpec spec(2, 0.1, 4.0);
    const SumMaxResult a = estimate_sum_max_ratio(spec, {1.0, 10.0}, 20000, 4, 1e-3, 0.99, 1);
    const SumMaxResult b = estimate_sum_max_ratio(spec, {1.0, 10.0}, 20000, 4, 1e-3, 0.99, 3);
    o.require(a.max_samples == b.max_samples && a.rows[0].exceed_sum == b.rows[0].exceed_sum, "sum/max parity");
    o.detail << "plan " << par.plan << " (byte identity of CLI output is checked by the cli test)";
}

}  // namespace

int main() {
    const std::vector<std::function<void(Outcome&)>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        o.detail.precision(6);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i](o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu: %s (%.2f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
