#include "figures.hpp"

#include "txcap/basic.hpp"
#include "txcap/csv.hpp"
#include "txcap/design.hpp"
#include "txcap/extensions.hpp"
#include "txcap/mimo.hpp"
#include "txcap/montecarlo.hpp"
#include "txcap/numeric.hpp"
#include "txcap/shotnoise.hpp"
#include "txcap/specfun.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

using namespace txcap;

namespace {

struct Options {
    std::string command;
    std::string target;

    int d = 2;
    double alpha = 4.0, u = 1.0, tau = 1.0, lambda = 0.0, qstar = 0.1, power = 1.0, noise = 0.0, epsilon = 0.0;
    long long trials = 100000;
    std::uint64_t seed = 1;
    std::string out;
    int workers = 0;
    double tol = 1e-3, conf = 0.99;
    std::string estimate = "op";

    double kappa = 1.0, pmin = 1.0, hhat = 0.0, f = 0.0;
    int K = 0;
    double ebno = std::numeric_limits<double>::quiet_NaN();
    double W = 10e6, R = 1e6, eta = 1e-6, B = 1.0;
    int nt = 1, nr = 1, streams = 1, l = 2;
    double z = 0.0;
    double U = 1.0;
    int M = 1, A = 1;
    double mu = 0.0;
    std::string n = "inf";
    double p = 0.0;
    double y = 1.0;
    std::string fade = "rayleigh";
    std::string rx = "mrc";
    double umin = 1.0, umax = 1.0;

    NetworkParams net() const {
        NetworkParams q;
        q.d = d;
        q.alpha = alpha;
        q.u = u;
        q.tau = tau;
        q.lambda = lambda;
        q.P = power;
        q.N = noise;
        q.epsilon = epsilon;
        return q;
    }
    MultihopParams multihop() const {
        MultihopParams m;
        m.U = U;
        m.M = M;
        m.A = A;
        m.lambda = lambda;
        m.alpha = alpha;
        m.tau = tau;
        m.P = power;
        m.N = noise;
        return m;
    }
    FadeDistribution fade_law() const {
        if (fade == "rayleigh") return FadeDistribution::rayleigh();
        if (fade == "none") return FadeDistribution::degenerate(1.0);
        throw std::invalid_argument("unknown fade '" + fade + "' (expected rayleigh or none)");
    }
    LinkDistanceLaw link() const { return mu > 0 ? LinkDistanceLaw::nearest_neighbor(mu, d) : LinkDistanceLaw::fixed(u); }
    AntennaConfig antennas() const { return {nt, nr, streams, z}; }
};

void put(const char* key, double v) { std::printf("%s %.10g\n", key, v); }
void put(const char* key, const std::string& v) { std::printf("%s %s\n", key, v.c_str()); }
void put_regime(Regime r) { put("regime", regime_name(r)); }

void eval_basic(const Options& o) {
    const NetworkParams p = o.net();
    const bool half = p.epsilon == 0 && p.alpha == 2.0 * p.d;
    if (o.target == "basic-op") {
        if (p.epsilon == 0) {
            put("op", half ? op_exact_half(p) : op_general(p));
            put_regime(Regime::exact);
        } else {
            const OpTcPair a = op_tc_asymptotic(p, o.qstar);
            put("op", a.op);
            put_regime(a.regime);
        }
    } else if (o.target == "basic-tc") {
        if (p.epsilon == 0) {
            put("tc", half ? tc_exact_half(p, o.qstar) : tc_general(p, o.qstar));
            put_regime(Regime::exact);
        } else {
            const OpTcPair a = op_tc_asymptotic(p, o.qstar);
            put("tc", a.tc);
            put_regime(a.regime);
        }
    } else if (o.target == "basic-asym") {
        const OpTcPair a = op_tc_asymptotic(p, o.qstar);
        put("op", a.op);
        put("tc", a.tc);
        put_regime(a.regime);
    } else if (o.target == "basic-bounds") {
        const OpTcPair lb = op_lb_tc_ub(p, o.qstar);
        put("op_lb", lb.op);
        put("tc_ub", lb.tc);
        put("op_ub_markov", op_ub_markov(p));
        if (p.epsilon > 0) put("op_ub_chebychev", op_ub_chebychev(p));
        put("op_ub_chernoff", op_ub_chernoff(p));
    } else if (o.target == "throughput") {
        const Throughput t = throughput(p);
        put("tp", t.tp);
        put("op", t.op);
        put_regime(t.regime);
    } else if (o.target == "tp-opt") {
        const TpOptimum t = tp_ub_optimum(p);
        const TcOptimum c = tc_ub_optimum(p);
        put("a", t.a);
        put("lambda_opt", t.lambda_opt);
        put("tp_max", t.tp_max);
        put("op_at_opt", t.op_at_opt);
        put("q_opt", c.q_opt);
        put("tc_max", c.tc_max);
        put_regime(Regime::upper_bound);
    } else {
        const SnSpec s(p.d, p.lambda, p.alpha, p.epsilon);
        const SeriesValue v = sn_ccdf_mapped(s, 1.0, o.y);
        put("ccdf", v.value);
        put("error_bound", v.error_bound);
        put("max_ccdf", 1.0 - max_sn_cdf(s, o.y));
    }
}

void eval_aloha(const Options& o) {
    Aloha a{};
    if (o.n == "inf") {
        a = slotted_aloha_asymptotic(o.lambda);
    } else {
        std::size_t used = 0;
        long long n = 0;
        try {
            n = std::stoll(o.n, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != o.n.size()) throw std::invalid_argument("--n must be a positive integer or inf");
        a = slotted_aloha(n, o.p);
    }
    put("tp", a.tp);
    put("op", a.op);
}

void eval_extensions(const Options& o) {
    const NetworkParams p = o.net();
    if (o.target == "fading") {
        const FadeDistribution h = o.fade_law();
        if (p.epsilon == 0) {
            const OpTcPair e = op_tc_rayleigh_exact(p, h, o.qstar);
            put("op_exact", e.op);
            put("tc_exact", e.tc);
        }
        const FadingAsymptotic a = op_tc_fading_asymptotic(p, FadeDistribution::rayleigh(), h, o.qstar);
        put("op_asym", a.op);
        put("tc_asym", a.tc);
        put("q0", a.q0);
        put("op_lb", op_lb_fading(p, FadeDistribution::rayleigh(), h));
    } else if (o.target == "vld") {
        const VldResult v = op_tc_vld(p, o.link(), o.qstar);
        put("op_asym", v.asymptotic.op);
        put("tc_asym", v.asymptotic.tc);
        put("op_lb", v.op_lb);
        put("tc_ub", v.tc_ub);
        if (!std::isnan(v.op_exact)) put("op_exact", v.op_exact);
        put("penalty", v.penalty);
    } else {
        const MultihopParams m = o.multihop();
        const MultihopResult r = multihop_tc(m);
        const HopChoice h = optimal_hops(m);
        put("tc_exact", r.exact);
        put("m_exact", r.m_exact);
        put("tc_ub", r.ub);
        put("m_ub", r.m_ub);
        put("m_root", h.root);
        put("m_star", h.m_star);
        put("method", h.method);
    }
}

void eval_design(const Options& o) {
    const NetworkParams p = o.net();
    if (o.target == "spectrum-nu") {
        if (std::isnan(o.ebno)) throw std::invalid_argument("--ebno is required");
        put("nu_max", max_spectral_efficiency(o.ebno));
        put("nu_star", optimal_spectral_efficiency(o.ebno, p.delta()));
        put("nu_star_high_snr", optimal_spectral_efficiency_high_snr(p.delta()));
    } else if (o.target == "spectrum") {
        SpectrumParams s;
        s.W = o.W;
        s.R = o.R;
        s.eta = o.eta;
        s.B = o.B;
        s.net = p;
        const SpectrumOptimum r = spectrum_optimum(s, o.qstar);
        put("ebno", s.ebno());
        put("nu_star", r.nu_star);
        put("B_continuous", r.B_continuous);
        put("B_star", r.B_star);
        put("tc", r.tc);
        put("tc_continuous", r.tc_continuous);
        put("tc_at_B", spectrum_tc(s, o.qstar));
    } else if (o.target == "ic") {
        put("op_lb", ic_op_lb({p, o.kappa, o.K, o.pmin}));
        put_regime(Regime::lower_bound);
    } else if (o.target == "fts") {
        FtsParams f{p, o.lambda, o.hhat, o.fade_law()};
        const FtsAsymptotic a = fts_asymptotic(f);
        put("lambda_hat", f.lambda_hat());
        put("op_asym", a.op);
        put("tp_asym", a.tp);
        put("b", fts_b(f));
        if (p.N == 0) {
            const FtsThreshold t = fts_optimal_threshold(f);
            put("h_hat_opt", t.h_hat);
        }
        const FtsBound b = fts_op_lb(f);
        put("op_lb", b.op_lb);
        put("tp_ub", b.tp_ub);
    } else {
        FpcParams f{p, o.f, FadeDistribution::rayleigh(), FadeDistribution::rayleigh(), o.fade_law()};
        const FpcAsymptotic a = fpc_asymptotic(f, o.qstar);
        put("op_asym", a.op);
        put("tc_asym", a.tc);
        put("op_lb", fpc_op_lb(f));
        const PowerMoments m = fpc_power_moments(p.P, o.f);
        put("power_mean", m.mean);
        put("power_variance", m.variance);
    }
}

void eval_mimo(const Options& o) {
    const NetworkParams p = o.net();
    const AntennaConfig a = o.antennas();
    if (o.target == "mrc") {
        const MrcTc t = mrc_tc(p, a, o.qstar);
        put("op", mrc_op(p, a));
        put("tc", t.tc);
        put("normalized", t.normalized);
        put_regime(t.regime);
    } else if (o.target == "eigenbf") {
        const IntensityBounds b = eigenbf_ocd_bounds(p, a, o.qstar);
        put("lambda_lb", b.lb);
        put("lambda_ub", b.ub);
        put_regime(b.regime);
    } else if (o.target == "pzf") {
        const PzfBounds b = pzf_bounds(p, a, o.qstar, o.l);
        put("op_ub", b.op_ub);
        put("tc_lb", b.tc_lb);
        put("tc_ub", b.tc_ub);
        put("z_star", b.z_star);
        put_regime(b.regime);
    } else if (o.target == "mmse") {
        put("tc_ub", mmse_tc_ub(p, o.nr, o.qstar));
        put("mrc_tc_ub", mrc_tc_ub(p, o.nr, o.qstar));
        put("zf_tc_ub", zf_tc_ub(p, o.nr, o.qstar));
        put_regime(Regime::upper_bound);
    } else if (o.target == "sm") {
        const StreamChoice s = sm_optimal_streams(p, a, sm_receiver_from_string(o.rx));
        put("k_raw", s.raw);
        put("k_star", s.rounded);
        put_regime(s.regime);
    } else {
        const SdmaBounds b = sdma_dpc_tc_bounds(p, {o.umin, o.umax}, a, o.qstar);
        put("tc_lb", b.lb);
        put("tc_ub", b.ub);
        put("k_star_lb", b.k_star_lb);
        put("k_star_ub", b.k_star_ub);
        put_regime(b.regime);
    }
}

const std::map<std::string, void (*)(const Options&)>& eval_targets() {
    static const std::map<std::string, void (*)(const Options&)> t = {
        {"basic-op", eval_basic},   {"basic-tc", eval_basic},   {"basic-asym", eval_basic},
        {"basic-bounds", eval_basic}, {"throughput", eval_basic}, {"tp-opt", eval_basic},
        {"sn-ccdf", eval_basic},    {"aloha", eval_aloha},      {"fading", eval_extensions},
        {"vld", eval_extensions},   {"multihop", eval_extensions}, {"spectrum", eval_design},
        {"spectrum-nu", eval_design}, {"ic", eval_design},      {"fts", eval_design},
        {"fpc", eval_design},       {"mrc", eval_mimo},         {"eigenbf", eval_mimo},
        {"pzf", eval_mimo},         {"mmse", eval_mimo},        {"sm", eval_mimo},
        {"sdma", eval_mimo},
    };
    return t;
}

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

void run_mc(const Options& o) {
    SimConfig c;
    c.model = sim_model_from_string(o.target);
    c.net = o.net();
    c.interf_fade = o.fade_law();
    c.f = o.f;
    c.link = o.link();
    c.kappa = o.kappa;
    c.K = o.K;
    c.P_min = o.pmin;
    c.lambda_pot = o.lambda;
    c.h_hat = o.hhat;
    c.n_r = o.nr;
    c.multihop = o.multihop();
    c.trials = o.trials;
    c.seed = o.seed;
    c.window_tolerance = o.tol;
    c.confidence = o.conf;
    c.workers = o.workers;
    if (o.estimate != "op" && o.estimate != "tc") throw std::invalid_argument("--estimate must be op or tc");
    const EmpiricalEstimate e = o.estimate == "op" ? estimate_op(c) : estimate_tc(c, o.qstar);
    put(o.estimate == "op" ? "op" : "tc", e.mean);
    put("half_width", e.half_width);
    put("confidence", o.conf);
    std::printf("trials %lld\n", e.trials);
    std::printf("count %lld\n", e.count);
    put("window_radius", e.window_radius);
    put("bias_bound", e.bias_bound);
    put("plan", e.plan);
    if (!o.out.empty()) {
        CurveSeries s;
        s.name = "mc-" + o.target;
        s.x_label = "lambda";
        s.x = {o.lambda};
        s.add_column(o.estimate, {e.mean});
        s.add_column(o.estimate + "_hw", {e.half_width});
        s.add_column("window_radius", {e.window_radius});
        s.add_column("bias_bound", {e.bias_bound});
        // Every flag the simulation reads, so the sidecar can be fed back through --config.
        s.add_meta("d", std::to_string(o.d));
        for (const auto& [k, v] : {std::pair<const char*, double>{"alpha", o.alpha}, {"u", o.u}, {"tau", o.tau},
                                   {"lambda", o.lambda}, {"qstar", o.qstar}, {"power", o.power}, {"noise", o.noise},
                                   {"epsilon", o.epsilon}, {"tol", o.tol}, {"conf", o.conf}, {"kappa", o.kappa},
                                   {"pmin", o.pmin}, {"hhat", o.hhat}, {"f", o.f}, {"U", o.U}, {"mu", o.mu}})
            s.add_meta(k, format_double(v));
        for (const auto& [k, v] : {std::pair<const char*, long long>{"K", o.K}, {"nr", o.nr}, {"M", o.M}, {"A", o.A},
                                   {"trials", o.trials}})
            s.add_meta(k, std::to_string(v));
        s.add_meta("seed", std::to_string(o.seed));
        s.add_meta("estimate", o.estimate);
        s.add_meta("fade", o.fade);
        s.add_note("command", "mc " + o.target);
        s.add_note("plan", e.plan);
        put("csv", write_series(s, o.out));
    }
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Transmission-capacity calculator and simulator"};
    app.set_config("--config", "", "key = value file; flags override it");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.add_option("command", o.command, "eval, mc or figure")->required();
    app.add_option("target", o.target, "formula, model or figure id")->required();

    app.add_option("--d", o.d, "dimension");
    app.add_option("--alpha", o.alpha, "path-loss exponent");
    app.add_option("--u", o.u, "link distance");
    app.add_option("--tau", o.tau, "SINR threshold");
    app.add_option("--lambda,--lam", o.lambda, "intensity (potential intensity for fts)");
    app.add_option("--qstar", o.qstar, "target outage");
    app.add_option("--power", o.power, "transmit power");
    app.add_option("--noise", o.noise, "noise power");
    app.add_option("--epsilon", o.epsilon, "guard radius");
    app.add_option("--trials", o.trials, "Monte-Carlo trials");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--out", o.out, "output directory");
    app.add_option("--workers", o.workers, "worker threads (0: automatic)");
    app.add_option("--tol", o.tol, "window truncation tolerance");
    app.add_option("--conf", o.conf, "confidence level");
    app.add_option("--estimate", o.estimate, "mc quantity: op or tc");
    app.add_option("--kappa", o.kappa, "residual cancellation factor");
    app.add_option("--K", o.K, "cancellable interferers");
    app.add_option("--pmin", o.pmin, "cancellation power floor");
    app.add_option("--hhat", o.hhat, "fade threshold");
    app.add_option("--f", o.f, "power-control exponent");
    app.add_option("--ebno", o.ebno, "Eb/eta (linear)");
    app.add_option("--W", o.W, "bandwidth");
    app.add_option("--R", o.R, "rate");
    app.add_option("--eta", o.eta, "noise spectral density");
    app.add_option("--B", o.B, "band count");
    app.add_option("--nt", o.nt, "transmit antennas");
    app.add_option("--nr", o.nr, "receive antennas");
    app.add_option("--streams", o.streams, "streams");
    app.add_option("--z", o.z, "cancelled interferers (PZF)");
    app.add_option("--l", o.l, "PZF bound order");
    app.add_option("--U", o.U, "end-to-end distance");
    app.add_option("--M", o.M, "hops");
    app.add_option("--A", o.A, "attempts");
    app.add_option("--mu", o.mu, "receiver intensity (nearest-neighbour link law)");
    app.add_option("--n", o.n, "Aloha users or inf");
    app.add_option("--p", o.p, "Aloha transmit probability");
    app.add_option("--y", o.y, "shot-noise level");
    app.add_option("--fade", o.fade, "interferer fade: rayleigh or none");
    app.add_option("--rx", o.rx, "receiver: mrc, zf or blast-d");
    app.add_option("--umin", o.umin, "SDMA cluster inner radius");
    app.add_option("--umax", o.umax, "SDMA cluster outer radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (o.trials < 1) throw std::invalid_argument("trials must be at least 1");
        if (o.command == "eval") {
            const auto& t = eval_targets();
            const auto it = t.find(o.target);
            if (it == t.end()) {
                std::vector<std::string> names;
                for (const auto& kv : t) names.push_back(kv.first);
                throw std::invalid_argument("unknown eval target '" + o.target + "'; supported: " + joined(names));
            }
            it->second(o);
        } else if (o.command == "mc") {
            run_mc(o);
        } else if (o.command == "figure") {
            cli::FigureRun run;
            if (app.count("--trials") > 0) run.trials = o.trials;
            run.seed = o.seed;
            run.workers = o.workers;
            if (!o.out.empty()) run.out_dir = o.out;
            for (const auto& path : cli::run_figure(o.target, run)) put("csv", path);
        } else {
            throw std::invalid_argument("unknown command '" + o.command + "' (expected eval, mc or figure)");
        }
    } catch (const numerical_failure& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        // Quadrature and special-function evaluation errors.
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
