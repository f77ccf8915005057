#include "figures.hpp"

#include "txcap/basic.hpp"
#include "txcap/csv.hpp"
#include "txcap/design.hpp"
#include "txcap/extensions.hpp"
#include "txcap/mimo.hpp"
#include "txcap/montecarlo.hpp"
#include "txcap/pointproc.hpp"
#include "txcap/shotnoise.hpp"
#include "txcap/specfun.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace txcap::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<double> logspace(double lo_exp, double hi_exp, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (n - 1)));
    return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

std::string num(double v) { return format_double(v); }

// Evaluates f, mapping parameter-range errors to NaN (infeasible cells).
double guarded(const std::function<double()>& f) {
    try {
        return f();
    } catch (const std::invalid_argument&) {
        return nan;
    } catch (const std::domain_error&) {
        return nan;
    }
}

NetworkParams net(double alpha, double tau, double lambda = 0.0, double u = 1.0, double eps = 0.0) {
    NetworkParams p;
    p.alpha = alpha;
    p.tau = tau;
    p.lambda = lambda;
    p.u = u;
    p.epsilon = eps;
    return p;
}

void note_net(CurveSeries& s, const NetworkParams& p) {
    std::ostringstream os;
    os << "d=" << p.d << " alpha=" << num(p.alpha) << " u=" << num(p.u) << " tau=" << num(p.tau)
       << " P=" << num(p.P) << " N=" << num(p.N) << " epsilon=" << num(p.epsilon);
    s.add_note("network", os.str());
}

CurveSeries series(const std::string& name, const std::string& x_label, std::vector<double> x) {
    CurveSeries s;
    s.name = name;
    s.x_label = x_label;
    s.x = std::move(x);
    return s;
}

SimConfig sim(const FigureRun& run, SimModel m, const NetworkParams& p) {
    SimConfig c;
    c.model = m;
    c.net = p;
    c.trials = run.trials;
    c.seed = run.seed;
    c.workers = run.workers;
    return c;
}

using Panels = std::vector<CurveSeries>;

// Counts of a unit-intensity planar PPP in regions of unit area.
Panels ppp_hist(const FigureRun& run) {
    const int kmax = 10;
    std::vector<double> k(kmax + 1), freq(kmax + 1, 0.0), hw(kmax + 1), pmf(kmax + 1);
    const Window w(2, 0.0, 1.0 / std::sqrt(pi));
    Rng rng(RngStream{run.seed, 0});
    for (long long t = 0; t < run.trials; ++t) {
        const auto n = sample_ppp(1.0, w, rng).size();
        if (n <= static_cast<std::size_t>(kmax)) freq[n] += 1.0;
    }
    const double z = normal_quantile(0.995);
    for (int i = 0; i <= kmax; ++i) {
        k[i] = i;
        freq[i] /= static_cast<double>(run.trials);
        hw[i] = z * std::sqrt(freq[i] * (1 - freq[i]) / static_cast<double>(run.trials));
        pmf[i] = std::exp(-1.0 - std::lgamma(i + 1.0));
    }
    auto s = series("ppp-hist", "count", k);
    s.add_column("empirical", freq);
    s.add_column("empirical_hw", hw);
    s.add_column("poisson_pmf", pmf);
    s.add_note("setup", "intensity 1, d=2, regions of unit area");
    return {s};
}

Panels sn_ccdf(const FigureRun& run) {
    const SnSpec spec(2, 0.1, 4.0);
    const auto ys = logspace(0.0, 3.0, 19);
    const double gamma = stable_dispersion(spec).gamma;
    const SumMaxResult mc = estimate_sum_max_ratio(spec, ys, run.trials, run.seed, 1e-3, 0.99, run.workers);
    std::vector<double> levy, ser, err, mx, ms, ms_hw, mm, mm_hw, ratio;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double y = ys[i];
        levy.push_back(levy_ccdf(gamma, y));
        try {
            const SeriesValue v = sn_ccdf_mapped(spec, 1.0, y);
            ser.push_back(v.value);
            err.push_back(v.error_bound);
        } catch (const std::domain_error&) {
            ser.push_back(nan);
            err.push_back(nan);
        }
        mx.push_back(1.0 - max_sn_cdf(spec, y));
        ratio.push_back(levy.back() / mx.back());
        ms.push_back(mc.rows[i].p_sum);
        ms_hw.push_back(mc.rows[i].hw_sum);
        mm.push_back(mc.rows[i].p_max);
        mm_hw.push_back(mc.rows[i].hw_max);
    }
    auto s = series("sn-ccdf", "y", ys);
    s.add_column("levy_ccdf", levy);
    s.add_column("series_ccdf", ser);
    s.add_column("series_error_bound", err);
    s.add_column("max_ccdf", mx);
    s.add_column("sum_max_ratio", ratio);
    s.add_column("mc_sum_ccdf", ms);
    s.add_column("mc_sum_ccdf_hw", ms_hw);
    s.add_column("mc_max_ccdf", mm);
    s.add_column("mc_max_ccdf_hw", mm_hw);
    s.add_note("setup", "d=2 alpha=4 lambda=0.1");
    s.add_note("plan", mc.plan);
    return {s};
}

Panels op_tc_exact(const FigureRun& run) {
    const NetworkParams base = net(4.0, 5.0);
    const auto ls = logspace(-3.0, -1.0, 9);
    std::vector<double> ex, as, lb, mc, hw;
    for (double l : ls) {
        const NetworkParams p = base.with_lambda(l);
        ex.push_back(op_exact_half(p));
        as.push_back(op_tc_asymptotic(p, 0.1).op);
        lb.push_back(op_lb_tc_ub(p, 0.1).op);
        const EmpiricalEstimate e = estimate_op(sim(run, SimModel::basic, p));
        mc.push_back(e.mean);
        hw.push_back(e.half_width);
    }
    auto a = series("op-tc-exact-op", "lambda", ls);
    a.add_column("op_exact", ex);
    a.add_column("op_asymptotic", as);
    a.add_column("op_lb", lb);
    a.add_column("op_mc", mc);
    a.add_column("op_mc_hw", hw);
    note_net(a, base);

    const auto qs = linspace(0.01, 0.3, 30);
    std::vector<double> te, ta, tu;
    for (double q : qs) {
        te.push_back(tc_exact_half(base, q));
        ta.push_back(op_tc_asymptotic(base, q).tc);
        tu.push_back(op_lb_tc_ub(base, q).tc);
    }
    auto b = series("op-tc-exact-tc", "qstar", qs);
    b.add_column("tc_exact", te);
    b.add_column("tc_asymptotic", ta);
    b.add_column("tc_ub", tu);
    note_net(b, base);
    b.add_note("regime.tc_asymptotic", regime_name(Regime::asymptotic));
    return {a, b};
}

Panels bounds_sandwich(const FigureRun&) {
    const NetworkParams base = net(4.0, 5.0);
    const auto ls = logspace(-3.0, 0.0, 16);
    std::vector<double> ex, lb, mk, ch;
    for (double l : ls) {
        const NetworkParams p = base.with_lambda(l);
        ex.push_back(op_exact_half(p));
        lb.push_back(op_lb_tc_ub(p, 0.1).op);
        mk.push_back(op_ub_markov(p));
        ch.push_back(op_ub_chernoff(p));
    }
    auto s = series("bounds-sandwich", "lambda", ls);
    s.add_column("op_lb", lb);
    s.add_column("op_exact", ex);
    s.add_column("op_ub_markov", mk);
    s.add_column("op_ub_chernoff", ch);
    note_net(s, base);
    return {s};
}

Panels tp_tc(const FigureRun&) {
    const NetworkParams base = net(4.0, 5.0);
    const TpOptimum opt = tp_ub_optimum(base);
    const auto ls = linspace(0.0, 0.5, 101);
    std::vector<double> tp, op;
    for (double l : ls) {
        const double q = -std::expm1(-l * opt.a);
        op.push_back(q);
        tp.push_back(l * (1 - q));
    }
    auto a = series("tp-tc-lambda", "lambda", ls);
    a.add_column("op_lb", op);
    a.add_column("tp_ub", tp);
    note_net(a, base);
    a.add_note("a", num(opt.a));
    a.add_note("lambda_opt", num(opt.lambda_opt));
    a.add_note("tp_max", num(opt.tp_max));

    const auto qs = linspace(0.005, 0.995, 199);
    std::vector<double> tc;
    for (double q : qs) tc.push_back(op_lb_tc_ub(base, q).tc);
    auto b = series("tp-tc-qstar", "qstar", qs);
    b.add_column("tc_ub", tc);
    note_net(b, base);
    const TcOptimum t = tc_ub_optimum(base);
    b.add_note("q_opt", num(t.q_opt));
    b.add_note("tc_max", num(t.tc_max));
    return {a, b};
}

Panels mark_cheb_cher(const FigureRun& run) {
    const NetworkParams base = net(4.0, 1.0, 0.0, 1.0, 0.25);
    const auto ls = logspace(-3.0, -0.5, 8);
    std::vector<double> mk, cb, ch, lb, mc, hw;
    for (double l : ls) {
        const NetworkParams p = base.with_lambda(l);
        mk.push_back(op_ub_markov(p));
        cb.push_back(op_ub_chebychev(p));
        ch.push_back(op_ub_chernoff(p));
        lb.push_back(op_lb_tc_ub(p, 0.1).op);
        const EmpiricalEstimate e = estimate_op(sim(run, SimModel::basic, p));
        mc.push_back(e.mean);
        hw.push_back(e.half_width);
    }
    auto s = series("mark-cheb-cher", "lambda", ls);
    s.add_column("op_lb", lb);
    s.add_column("op_ub_markov", mk);
    s.add_column("op_ub_chebychev", cb);
    s.add_column("op_ub_chernoff", ch);
    s.add_column("op_mc", mc);
    s.add_column("op_mc_hw", hw);
    note_net(s, base);
    return {s};
}

Panels fad_compare(const FigureRun&) {
    const auto alphas = linspace(2.2, 8.0, 30);
    const FadeDistribution ray = FadeDistribution::rayleigh();
    std::vector<double> dl, closed, computed;
    for (double a : alphas) {
        const NetworkParams p = net(a, 1.0, 1e-4);
        const double d = p.delta();
        dl.push_back(d);
        closed.push_back(pi * d / std::sin(pi * d));
        computed.push_back(op_tc_fading_asymptotic(p, ray, ray, 0.1).slope / (op_tc_asymptotic(p, 0.1).op / p.lambda));
    }
    auto a = series("fad-compare-ratio", "alpha", alphas);
    a.add_column("delta", dl);
    a.add_column("slope_ratio_closed", closed);
    a.add_column("slope_ratio", computed);
    a.add_note("network", "d=2 u=1 tau=1 N=0; ratio of Rayleigh to non-fading OP slopes");

    const NetworkParams base = net(4.0, 1.0);
    const auto ls = logspace(-3.0, 0.0, 16);
    std::vector<double> nf, rf;
    for (double l : ls) {
        const NetworkParams p = base.with_lambda(l);
        nf.push_back(op_exact_half(p));
        rf.push_back(op_tc_rayleigh_exact(p, ray, 0.1).op);
    }
    auto b = series("fad-compare-op", "lambda", ls);
    b.add_column("op_no_fading", nf);
    b.add_column("op_rayleigh", rf);
    note_net(b, base);
    return {a, b};
}

Panels fad_bounds(const FigureRun& run) {
    const NetworkParams base = net(4.0, 1.0);
    const FadeDistribution ray = FadeDistribution::rayleigh();
    const auto ls = logspace(-3.0, -0.5, 8);
    std::vector<double> ex, lb, as, mc, hw;
    for (double l : ls) {
        const NetworkParams p = base.with_lambda(l);
        ex.push_back(op_tc_rayleigh_exact(p, ray, 0.1).op);
        lb.push_back(op_lb_fading(p, ray, ray));
        as.push_back(op_tc_fading_asymptotic(p, ray, ray, 0.1).op);
        const EmpiricalEstimate e = estimate_op(sim(run, SimModel::fading, p));
        mc.push_back(e.mean);
        hw.push_back(e.half_width);
    }
    auto s = series("fad-bounds", "lambda", ls);
    s.add_column("op_exact", ex);
    s.add_column("op_lb", lb);
    s.add_column("op_asymptotic", as);
    s.add_column("op_mc", mc);
    s.add_column("op_mc_hw", hw);
    note_net(s, base);
    return {s};
}

Panels vld(const FigureRun&) {
    const NetworkParams base = net(4.0, 1.0);
    const LinkDistanceLaw nn = LinkDistanceLaw::nearest_neighbor(1.0, 2);
    const auto ls = logspace(-5.0, -1.0, 17);
    std::vector<double> v, fl, r, lb;
    double penalty = 0;
    for (double l : ls) {
        NetworkParams p = base.with_lambda(l);
        const VldResult res = op_tc_vld(p, nn, 0.1);
        penalty = res.penalty;
        p.u = nn.mean();
        const double fixed = op_tc_asymptotic(p, 0.1).op;
        v.push_back(res.asymptotic.op);
        fl.push_back(fixed);
        r.push_back(res.asymptotic.op / fixed);
        lb.push_back(res.op_lb);
    }
    auto s = series("vld", "lambda", ls);
    s.add_column("op_vld", v);
    s.add_column("op_fixed_mean_distance", fl);
    s.add_column("ratio", r);
    s.add_column("op_vld_lb", lb);
    note_net(s, base);
    s.add_note("link", "nearest neighbour of a unit-intensity receiver process");
    s.add_note("penalty", num(penalty));
    return {s};
}

MultihopParams hop_params(int A) {
    MultihopParams m;
    m.U = 10.0;
    m.A = A;
    m.lambda = 0.002;
    m.alpha = 4.0;
    m.tau = 1.0;
    return m;
}

void note_hop(CurveSeries& s, const MultihopParams& m) {
    s.add_note("multihop", "U=" + num(m.U) + " lambda=" + num(m.lambda) + " alpha=" + num(m.alpha) +
                               " tau=" + num(m.tau) + " N=0 Rayleigh");
}

Panels multihop_m(const FigureRun&) {
    Panels out;
    for (int A : {6, 12}) {
        const MultihopParams m = hop_params(A);
        const MultihopResult r = multihop_tc(m);
        std::vector<double> ms;
        for (int i = 1; i <= A; ++i) ms.push_back(i);
        auto s = series("multihop-M-A" + std::to_string(A), "M", ms);
        s.add_column("tc_exact_over_lambda", r.ratio_exact);
        s.add_column("tc_ub_over_lambda", r.ratio_ub);
        note_hop(s, m);
        s.add_note("m_exact", std::to_string(r.m_exact));
        s.add_note("m_ub", std::to_string(r.m_ub));
        out.push_back(s);
    }
    return out;
}

Panels multihop_a(const FigureRun&) {
    std::vector<double> as, ex, ub, me, mu;
    for (int A = 1; A <= 20; ++A) {
        const MultihopResult r = multihop_tc(hop_params(A));
        as.push_back(A);
        ex.push_back(r.exact);
        ub.push_back(r.ub);
        me.push_back(r.m_exact);
        mu.push_back(r.m_ub);
    }
    auto s = series("multihop-A", "A", as);
    s.add_column("tc_exact", ex);
    s.add_column("tc_ub", ub);
    s.add_column("m_exact", me);
    s.add_column("m_ub", mu);
    note_hop(s, hop_params(1));
    return {s};
}

Panels spec_omega(const FigureRun&) {
    std::vector<double> bs;
    for (int b = 1; b <= 40; ++b) bs.push_back(b);
    auto s = series("spec-omega", "B", bs);
    for (double ebno : {2.0, 5.0, 10.0}) {
        SpectrumParams p;
        p.eta = 1.0 / (p.R * ebno);
        std::vector<double> w;
        for (double b : bs) w.push_back(guarded([&] { return spectrum_objective_bands(p, b); }));
        s.add_column("omega_ebno_" + num(ebno), w);
    }
    s.add_note("setup", "W=10e6 R=1e6 d=2 alpha=4 u=1 P=1; NaN where the inner bracket is not positive");
    return {s};
}

Panels spec_nu(const FigureRun&) {
    const auto db = linspace(-1.5, 30.0, 64);
    std::vector<double> vmax;
    std::map<double, std::vector<double>> star;
    const std::vector<double> deltas = {0.5, 2.0 / 3.0, 0.8};
    for (double x : db) {
        const double e = std::pow(10.0, x / 10.0);
        vmax.push_back(guarded([&] { return max_spectral_efficiency(e); }));
        for (double d : deltas) star[d].push_back(guarded([&] { return optimal_spectral_efficiency(e, d); }));
    }
    auto s = series("spec-nu", "ebno_db", db);
    s.add_column("nu_max", vmax);
    for (double d : deltas) s.add_column("nu_star_delta_" + num(d), star[d]);
    for (double d : deltas)
        s.add_note("nu_star_high_snr_delta_" + num(d), num(optimal_spectral_efficiency_high_snr(d)));
    return {s};
}

Panels ic_grid(const FigureRun&) {
    Panels out;
    const std::vector<double> kappas = {0.0, 0.05, 0.1, 0.5, 1.0};
    for (double tau : {1.0, 5.0}) {
        const NetworkParams p = net(4.0, tau, 0.025);
        std::vector<double> ks;
        for (int K = 0; K <= 5; ++K) ks.push_back(K);
        auto s = series("ic-grid-tau" + num(tau), "K", ks);
        for (double kappa : kappas) {
            std::vector<double> q;
            for (int K = 0; K <= 5; ++K) q.push_back(ic_op_lb({p, kappa, K, 1.0}));
            s.add_column("op_lb_kappa_" + num(kappa), q);
        }
        note_net(s, p);
        s.add_note("lambda", "0.025");
        s.add_note("P_min", "1");
        out.push_back(s);
    }
    return out;
}

Panels fts_asymp(const FigureRun&) {
    const NetworkParams base = net(4.0, 5.0);
    const auto hs = linspace(0.0, 3.0, 61);
    auto a = series("fts-asymp-threshold", "h_hat", hs);
    for (double lp : {0.1, 0.2, 0.5}) {
        std::vector<double> tp;
        for (double h : hs) tp.push_back(fts_asymptotic({base, lp, h}).tp);
        a.add_column("tp_lambda_" + num(lp), tp);
    }
    note_net(a, base);
    a.add_note("b", num(fts_b({base, 1.0, 0.0})));

    const auto lps = logspace(-2.0, 0.5, 26);
    std::vector<double> bl, hopt;
    const double b = fts_b({base, 1.0, 0.0});
    for (double lp : lps) {
        bl.push_back(b * lp);
        hopt.push_back(fts_optimal_threshold({base, lp, 0.0}).h_hat);
    }
    auto c = series("fts-asymp-optimum", "lambda_pot", lps);
    c.add_column("b_lambda", bl);
    c.add_column("h_hat_opt", hopt);
    note_net(c, base);

    const auto lh = logspace(-3.0, -1.0, 11);
    std::vector<double> fns, nf, fts;
    for (double l : lh) {
        const TpComparison t = fts_tp_comparison({base, 1.0, 0.0}, l);
        fns.push_back(t.fading_unscheduled);
        nf.push_back(t.no_fading);
        fts.push_back(t.fading_scheduled);
    }
    auto d = series("fts-asymp-compare", "lambda_hat", lh);
    d.add_column("tp_fading_no_scheduling", fns);
    d.add_column("tp_no_fading", nf);
    d.add_column("tp_fading_threshold_scheduling", fts);
    note_net(d, base);
    return {a, c, d};
}

Panels fpc_f(const FigureRun&) {
    const NetworkParams p = net(4.0, 1.0, 0.01);
    const auto fs = linspace(0.0, 1.0, 41);
    std::vector<double> as, lb, var;
    for (double f : fs) {
        const FpcParams q{p, f};
        as.push_back(fpc_asymptotic(q, 0.1).op);
        lb.push_back(fpc_op_lb(q));
        var.push_back(guarded([&] { return fpc_power_moments(1.0, f).variance; }));
    }
    auto s = series("fpc-f", "f", fs);
    s.add_column("op_asymptotic", as);
    s.add_column("op_lb", lb);
    s.add_column("power_variance", var);
    note_net(s, p);
    s.add_note("lambda", "0.01");
    return {s};
}

Panels fpc_lam(const FigureRun& run) {
    const NetworkParams base = net(4.0, 1.0);
    const auto ls = logspace(-3.0, -1.0, 9);
    auto s = series("fpc-lam", "lambda", ls);
    for (double f : {0.0, 0.5, 1.0}) {
        std::vector<double> as, lb;
        for (double l : ls) {
            const FpcParams q{base.with_lambda(l), f};
            as.push_back(fpc_asymptotic(q, 0.1).op);
            lb.push_back(fpc_op_lb(q));
        }
        s.add_column("op_asymptotic_f" + num(f), as);
        s.add_column("op_lb_f" + num(f), lb);
    }
    std::vector<double> mc, hw;
    for (double l : ls) {
        SimConfig c = sim(run, SimModel::fpc, base.with_lambda(l));
        c.f = 0.5;
        const EmpiricalEstimate e = estimate_op(c);
        mc.push_back(e.mean);
        hw.push_back(e.half_width);
    }
    s.add_column("op_mc_f0.5", mc);
    s.add_column("op_mc_f0.5_hw", hw);
    note_net(s, base);
    return {s};
}

Panels mimo_ocd(const FigureRun&) {
    const NetworkParams p = net(4.0, 1.0);
    const double q = 0.1, delta = p.delta();
    std::vector<double> ns, mrc, mrc_lo, mrc_hi, pzf_lo, pzf_hi, mmse, eb_lo, eb_hi;
    for (int n = 1; n <= 32; ++n) {
        ns.push_back(n);
        const MrcTc t = mrc_tc(p, {1, n, 1, 0.0}, q);
        const double unit = std::pow(n, delta) * q / (c_alpha(p.alpha) * std::pow(p.tau, delta) * p.u * p.u);
        mrc.push_back(t.tc);
        mrc_lo.push_back(unit);
        mrc_hi.push_back(unit * gamma_fn(1.0 - delta));
        const double z = std::min<double>(std::round((1.0 - 2.0 / p.alpha) * n), n - 1);
        const PzfBounds b = pzf_bounds(p, {1, n, 1, z}, q);
        pzf_lo.push_back(b.tc_lb);
        pzf_hi.push_back(b.tc_ub);
        mmse.push_back(mmse_tc_ub(p, n, q));
        const IntensityBounds e = eigenbf_ocd_bounds(p, {n, n, 1, 0.0}, q);
        eb_lo.push_back(e.lb);
        eb_hi.push_back(e.ub);
    }
    auto s = series("mimo-ocd", "n_r", ns);
    s.add_column("mrc_tc", mrc);
    s.add_column("mrc_tc_lb", mrc_lo);
    s.add_column("mrc_tc_ub", mrc_hi);
    s.add_column("pzf_tc_lb", pzf_lo);
    s.add_column("pzf_tc_ub", pzf_hi);
    s.add_column("mmse_tc_ub", mmse);
    s.add_column("eigenbf_lambda_lb", eb_lo);
    s.add_column("eigenbf_lambda_ub", eb_hi);
    note_net(s, p);
    s.add_note("qstar", num(q));
    s.add_note("pzf_z", "round((1 - 2/alpha) n_r)");
    return {s};
}

const std::map<std::string, Panels (*)(const FigureRun&)>& table() {
    static const std::map<std::string, Panels (*)(const FigureRun&)> t = {
        {"ppp-hist", ppp_hist},       {"sn-ccdf", sn_ccdf},         {"op-tc-exact", op_tc_exact},
        {"bounds-sandwich", bounds_sandwich}, {"tp-tc", tp_tc},     {"mark-cheb-cher", mark_cheb_cher},
        {"fad-compare", fad_compare}, {"fad-bounds", fad_bounds},   {"vld", vld},
        {"multihop-A", multihop_a},   {"multihop-M", multihop_m},   {"spec-omega", spec_omega},
        {"spec-nu", spec_nu},         {"ic-grid", ic_grid},         {"fts-asymp", fts_asymp},
        {"fpc-f", fpc_f},             {"fpc-lam", fpc_lam},         {"mimo-ocd", mimo_ocd},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {
        "ppp-hist",    "sn-ccdf",    "op-tc-exact", "bounds-sandwich", "tp-tc",  "mark-cheb-cher",
        "fad-compare", "fad-bounds", "vld",         "multihop-A",      "multihop-M", "spec-omega",
        "spec-nu",     "ic-grid",    "fts-asymp",   "fpc-f",           "fpc-lam", "mimo-ocd"};
    return ids;
}

std::vector<std::string> run_figure(const std::string& id, const FigureRun& run) {
    const auto it = table().find(id);
    if (it == table().end()) {
        std::string list;
        for (const auto& s : figure_ids()) list += (list.empty() ? "" : ", ") + s;
        throw std::invalid_argument("unknown figure id '" + id + "'; supported: " + list);
    }
    if (run.trials < 1) throw std::invalid_argument("trials must be at least 1");
    std::vector<std::string> paths;
    for (CurveSeries& s : it->second(run)) {
        s.add_meta("trials", std::to_string(run.trials));
        s.add_meta("seed", std::to_string(run.seed));
        s.add_note("command", "figure " + id);
        paths.push_back(write_series(s, run.out_dir));
    }
    return paths;
}

}  // namespace txcap::cli
