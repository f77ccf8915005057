#include "txcap/montecarlo.hpp"

#include "txcap/design.hpp"
#include "txcap/numeric.hpp"
#include "txcap/pointproc.hpp"
#include "txcap/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace txcap {

std::string sim_model_name(SimModel m) {
    switch (m) {
        case SimModel::basic: return "basic";
        case SimModel::fading: return "fading";
        case SimModel::vld: return "vld";
        case SimModel::ic: return "ic";
        case SimModel::fts: return "fts";
        case SimModel::fpc: return "fpc";
        case SimModel::mrc: return "mrc";
        case SimModel::multihop: return "multihop";
    }
    return "?";
}

SimModel sim_model_from_string(const std::string& s) {
    for (SimModel m : {SimModel::basic, SimModel::fading, SimModel::vld, SimModel::ic, SimModel::fts, SimModel::fpc,
                       SimModel::mrc, SimModel::multihop})
        if (sim_model_name(m) == s) return m;
    throw std::invalid_argument("unknown model '" + s + "' (expected basic, fading, vld, ic, fts, fpc, mrc or multihop)");
}

namespace {

NetworkParams multihop_net(const MultihopParams& mp) {
    NetworkParams n;
    n.d = 2;
    n.alpha = mp.alpha;
    n.tau = mp.tau;
    n.P = mp.P;
    n.N = mp.N;
    n.lambda = mp.lambda;
    n.u = mp.U / mp.M;
    return n;
}

double intensity_of(const SimConfig& c) {
    switch (c.model) {
        case SimModel::fts: return c.lambda_pot * c.signal_fade.ccdf(c.h_hat);
        case SimModel::multihop: return c.multihop.lambda;
        default: return c.net.lambda;
    }
}

SimConfig with_intensity(SimConfig c, double l) {
    switch (c.model) {
        case SimModel::fts: c.lambda_pot = l; break;
        case SimModel::multihop: c.multihop.lambda = l; break;
        default: c.net.lambda = l;
    }
    return c;
}

double raw_intensity(const SimConfig& c) {
    switch (c.model) {
        case SimModel::fts: return c.lambda_pot;
        case SimModel::multihop: return c.multihop.lambda;
        default: return c.net.lambda;
    }
}

// Mean interference mark and the outage threshold used to size the window.
struct WindowBasis {
    int d;
    double alpha;
    double intensity;
    double mark_mean;
    double threshold;
    double inner;
    double u_ref;
};

WindowBasis window_basis(const SimConfig& c) {
    WindowBasis b{c.net.d, c.net.alpha, intensity_of(c), 1.0, c.net.threshold(), c.net.epsilon, c.net.u};
    switch (c.model) {
        case SimModel::fading:
        case SimModel::fts:
        case SimModel::fpc: b.mark_mean = c.interf_fade.frac_moment(1.0); break;
        case SimModel::vld: {
            const double m = c.link.mean();
            const double sd = std::sqrt(std::max(c.link.moment(2.0) - m * m, 0.0));
            b.u_ref = m + 3.0 * sd;
            b.threshold = std::pow(b.u_ref, -c.net.alpha) / c.net.tau - c.net.N / c.net.P;
            if (!(b.threshold > 0)) {
                b.u_ref = m;
                b.threshold = std::pow(m, -c.net.alpha) / c.net.tau - c.net.N / c.net.P;
            }
            break;
        }
        case SimModel::multihop: {
            const NetworkParams n = multihop_net(c.multihop);
            b = {2, n.alpha, n.lambda, 1.0, n.threshold(), 0.0, n.u};
            break;
        }
        default: break;
    }
    if (!(b.threshold > 0)) throw std::invalid_argument("outage threshold is not positive; the window cannot be sized");
    return b;
}

double tail_mean(const WindowBasis& b, double R) {
    return b.intensity * b.d * ball_coeff(b.d) * b.mark_mean * std::pow(R, b.d - b.alpha) / (b.alpha - b.d);
}

double window_radius(const WindowBasis& b, double tol) {
    if (!(b.alpha > b.d)) throw std::invalid_argument("alpha must exceed d");
    double R = 2.0 * std::max(b.u_ref, b.inner) + 1.0;
    if (b.intensity > 0) {
        const double need = b.intensity * b.d * ball_coeff(b.d) * b.mark_mean / ((b.alpha - b.d) * tol * b.threshold);
        R = std::max(R, std::pow(need, 1.0 / (b.alpha - b.d)));
    }
    return R;
}

double z_score(double confidence) { return normal_quantile(0.5 + confidence / 2.0); }

double half_width(double p, long long n, double confidence) {
    if (n <= 0) return 0.0;
    return z_score(confidence) * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

int thread_cap() {
    const char* env = std::getenv("TXCAP_THREADS");
    if (env == nullptr) return 0;
    const int v = std::atoi(env);
    return v > 0 ? v : 0;
}

// Runs fn(rng, first_trial, n) over fixed-size chunks. Chunk i always uses
// stream (seed, i), so the merged integer counts do not depend on the worker count.
template <class Fn>
std::vector<long long> run_chunks(long long trials, int chunk_size, int workers, std::uint64_t seed, Fn fn) {
    const long long chunks = (trials + chunk_size - 1) / chunk_size;
    std::vector<long long> counts(static_cast<std::size_t>(chunks), 0);
    std::atomic<long long> next{0};
    auto work = [&]() {
        for (long long i; (i = next.fetch_add(1)) < chunks;) {
            const long long first = i * chunk_size;
            const long long n = std::min<long long>(chunk_size, trials - first);
            Rng rng(RngStream{seed, static_cast<std::uint64_t>(i)});
            counts[static_cast<std::size_t>(i)] = fn(rng, first, n);
        }
    };
    if (workers <= 1 || chunks <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex mu;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                try {
                    work();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                    next.store(chunks);
                }
            });
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    return counts;
}

std::string plan_text(long long trials, int chunk_size, std::uint64_t seed) {
    std::ostringstream os;
    os << "chunks=" << (trials + chunk_size - 1) / chunk_size << ";chunk_size=" << chunk_size << ";seed=" << seed
       << ";stream=chunk_index";
    return os.str();
}

// r^-alpha with the common integer exponents done by multiplication.
inline double path_gain(double r, double alpha) {
    if (alpha == 4.0) {
        const double r2 = r * r;
        return 1.0 / (r2 * r2);
    }
    if (alpha == 3.0) return 1.0 / (r * r * r);
    return path_gain(r, alpha);
}

// Sum of h_i |x_i|^-alpha with marks drawn from law.
double marked_sum(const Snapshot& s, double alpha, const FadeDistribution& law, Rng& rng) {
    double sum = 0.0;
    for (double r : s.points) sum += law.sample(rng) * path_gain(r, alpha);
    return sum;
}

double plain_sum(const Snapshot& s, double alpha) {
    double sum = 0.0;
    for (double r : s.points) sum += path_gain(r, alpha);
    return sum;
}

struct Trial {
    const SimConfig& c;
    Window win;
    double intensity;
    double fpc_norm00 = 1.0, fpc_norm11 = 1.0;
    NetworkParams hop{};

    bool operator()(Rng& rng) const {
        const NetworkParams& n = c.net;
        const double nP = n.N / n.P;
        switch (c.model) {
            case SimModel::basic: {
                const Snapshot s = sample_ppp(intensity, win, rng);
                return plain_sum(s, n.alpha) > n.threshold();
            }
            case SimModel::fading: {
                const double h0 = c.signal_fade.sample(rng);
                const Snapshot s = sample_ppp(intensity, win, rng);
                const double I = marked_sum(s, n.alpha, c.interf_fade, rng);
                return h0 * std::pow(n.u, -n.alpha) < n.tau * (I + nP);
            }
            case SimModel::vld: {
                const double u = c.link.sample(rng);
                const Snapshot s = sample_ppp(intensity, win, rng);
                return std::pow(u, -n.alpha) < n.tau * (plain_sum(s, n.alpha) + nP);
            }
            case SimModel::ic: {
                const Snapshot s = sample_ppp(intensity, win, rng);
                double pc = 0.0, uc = 0.0;
                for (std::size_t i = 0; i < s.points.size(); ++i) {
                    const double g = path_gain(s.points[i], n.alpha);
                    if (static_cast<int>(i) < c.K && n.P * g > c.P_min)
                        pc += g;
                    else
                        uc += g;
                }
                return c.kappa * pc + uc > n.threshold();
            }
            case SimModel::fts: {
                const double h0 = c.signal_fade.sample_above(c.h_hat, rng);
                const Snapshot s = sample_ppp(intensity, win, rng);
                const double I = marked_sum(s, n.alpha, c.interf_fade, rng);
                return h0 * std::pow(n.u, -n.alpha) < n.tau * (I + nP);
            }
            case SimModel::fpc: {
                const double h00 = c.signal_fade.sample(rng);
                const double S = std::pow(h00, 1.0 - c.f) / fpc_norm00 * std::pow(n.u, -n.alpha);
                const Snapshot s = sample_ppp(intensity, win, rng);
                double I = 0.0;
                for (double r : s.points) {
                    const double hii = c.own_fade.sample(rng);
                    const double hi0 = c.interf_fade.sample(rng);
                    I += std::pow(hii, -c.f) / fpc_norm11 * hi0 * path_gain(r, n.alpha);
                }
                return S < n.tau * (I + nP);
            }
            case SimModel::mrc: {
                double S = 0.0;
                for (int k = 0; k < c.n_r; ++k) S += rng.exponential();
                const Snapshot s = sample_ppp(intensity, win, rng);
                double I = 0.0;
                for (double r : s.points) I += rng.exponential() * path_gain(r, n.alpha);
                return S * std::pow(n.u, -n.alpha) < n.tau * (I + nP);
            }
            case SimModel::multihop: {
                const double hnP = hop.N / hop.P;
                int done = 0;
                for (int a = 0; a < c.multihop.A && done < c.multihop.M; ++a) {
                    const double h0 = rng.exponential();
                    const Snapshot s = sample_ppp(intensity, win, rng);
                    double I = 0.0;
                    for (double r : s.points) I += rng.exponential() * path_gain(r, hop.alpha);
                    if (!(h0 * std::pow(hop.u, -hop.alpha) < hop.tau * (I + hnP))) ++done;
                }
                return done < c.multihop.M;
            }
        }
        return false;
    }
};

}  // namespace

void SimConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (chunk_size < 1) throw std::invalid_argument("chunk size must be at least 1");
    if (!(window_tolerance > 0 && window_tolerance < 1)) throw std::invalid_argument("window tolerance must lie in (0, 1)");
    if (!(confidence > 0 && confidence < 1)) throw std::invalid_argument("confidence must lie in (0, 1)");
    switch (model) {
        case SimModel::multihop: multihop.validate(); break;
        case SimModel::ic: {
            IcParams p{net, kappa, K, P_min};
            p.validate();
            break;
        }
        case SimModel::fts: {
            FtsParams p{net, lambda_pot, h_hat, interf_fade};
            p.validate();
            if (!(signal_fade.ccdf(h_hat) > 0)) throw std::invalid_argument("fade threshold lies beyond the signal fade support");
            break;
        }
        case SimModel::fpc: {
            FpcParams p{net, f, signal_fade, own_fade, interf_fade};
            p.validate();
            if (!(f < 1)) throw std::invalid_argument("simulated FPC needs f < 1");
            if (!std::isfinite(signal_fade.frac_moment(-f)) || !std::isfinite(own_fade.frac_moment(-f)))
                throw std::invalid_argument("E[h^-f] must be finite for FPC power normalization");
            break;
        }
        case SimModel::mrc:
            if (n_r < 1) throw std::invalid_argument("n_r must be at least 1");
            net.validate();
            break;
        case SimModel::vld:
            // The link distance is random; only the shared fields are checked.
            if (net.d < 1 || net.d > 3) throw std::invalid_argument("dimension d must be 1, 2 or 3");
            if (!(net.alpha > net.d)) throw std::invalid_argument("alpha must exceed d");
            if (!(net.lambda >= 0) || !(net.tau > 0) || !(net.P > 0) || !(net.N >= 0))
                throw std::invalid_argument("lambda, tau, P, N out of range");
            if (link.dim() != net.d) throw std::invalid_argument("link-distance law dimension must match d");
            break;
        default: net.validate();
    }
}

double sim_window_radius(const SimConfig& cfg) { return window_radius(window_basis(cfg), cfg.window_tolerance); }

int sim_workers(const SimConfig& cfg, long long chunks) {
    int w = cfg.workers;
    if (w <= 0) {
        w = static_cast<int>(std::thread::hardware_concurrency());
        if (w <= 0) w = 1;
        const int cap = thread_cap();
        if (cap > 0) w = std::min(w, cap);
    }
    return static_cast<int>(std::max<long long>(1, std::min<long long>(w, chunks)));
}

EmpiricalEstimate estimate_op(const SimConfig& cfg) {
    cfg.validate();
    const WindowBasis basis = window_basis(cfg);
    const double R = window_radius(basis, cfg.window_tolerance);
    Trial trial{cfg, Window(basis.d, basis.inner, R), basis.intensity};
    if (cfg.model == SimModel::fpc) {
        trial.fpc_norm00 = cfg.signal_fade.frac_moment(-cfg.f);
        trial.fpc_norm11 = cfg.own_fade.frac_moment(-cfg.f);
    }
    if (cfg.model == SimModel::multihop) trial.hop = multihop_net(cfg.multihop);

    const long long chunks = (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
    const auto counts = run_chunks(cfg.trials, cfg.chunk_size, sim_workers(cfg, chunks), cfg.seed,
                                   [&](Rng& rng, long long, long long n) {
                                       long long k = 0;
                                       for (long long t = 0; t < n; ++t) k += trial(rng) ? 1 : 0;
                                       return k;
                                   });
    long long total = 0;
    for (long long k : counts) total += k;
    const double p = static_cast<double>(total) / static_cast<double>(cfg.trials);
    return {p,
            half_width(p, cfg.trials, cfg.confidence),
            cfg.trials,
            total,
            R,
            tail_mean(basis, R) / basis.threshold,
            plan_text(cfg.trials, cfg.chunk_size, cfg.seed)};
}

EmpiricalEstimate estimate_tc(const SimConfig& cfg, double q_star) {
    cfg.validate();
    if (!(q_star > 0 && q_star < 1)) throw std::invalid_argument("target outage q* must lie in (0, 1)");
    // Common random numbers across intensities keep the estimated curve monotone in practice.
    auto q_at = [&](double l) { return estimate_op(with_intensity(cfg, l)); };
    const EmpiricalEstimate q0 = q_at(0.0);
    if (q0.mean >= q_star) {
        EmpiricalEstimate e = q0;
        e.mean = 0.0;
        e.half_width = 0.0;
        return e;
    }
    double lo = 0.0, hi = raw_intensity(cfg) > 0 ? raw_intensity(cfg) : 0.01;
    EmpiricalEstimate at_hi = q_at(hi);
    for (int i = 0; at_hi.mean < q_star; ++i) {
        if (i > 60) throw numerical_failure("no intensity reaches the target outage");
        lo = hi;
        hi *= 2.0;
        at_hi = q_at(hi);
    }
    double mid = hi;
    EmpiricalEstimate at = at_hi;
    for (int i = 0; i < 60; ++i) {
        mid = 0.5 * (lo + hi);
        at = q_at(mid);
        if (std::fabs(at.mean - q_star) <= at.half_width && hi - lo < 1e-3 * hi) break;
        (at.mean < q_star ? lo : hi) = mid;
    }
    // Local slope for the intensity half-width.
    const double h = 0.1 * mid;
    const double slope = (q_at(mid + h).mean - q_at(std::max(mid - h, 0.0)).mean) / (mid + h - std::max(mid - h, 0.0));
    const double hw_l = slope > 0 ? half_width(q_star, cfg.trials, cfg.confidence) / slope : inf;
    at.mean = mid * (1.0 - q_star);
    at.half_width = hw_l * (1.0 - q_star);
    return at;
}

SumMaxResult estimate_sum_max_ratio(const SnSpec& spec, const std::vector<double>& y_grid, long long snapshots,
                                    std::uint64_t seed, double window_tolerance, double confidence, int workers) {
    spec.validate();
    if (spec.epsilon != 0) throw std::invalid_argument("sum/max comparison needs epsilon = 0");
    if (snapshots < 1) throw std::invalid_argument("snapshots must be at least 1");
    if (y_grid.empty()) throw std::invalid_argument("y grid must not be empty");
    std::vector<double> ys = y_grid;
    std::sort(ys.begin(), ys.end());
    if (!(ys.front() > 0)) throw std::invalid_argument("y grid must be positive");
    const WindowBasis basis{spec.d, spec.alpha, spec.intensity, 1.0, ys.front(), 0.0, 0.5};
    const double R = window_radius(basis, window_tolerance);
    const Window win(spec.d, 0.0, R);

    const int chunk = 1024;
    const long long chunks = (snapshots + chunk - 1) / chunk;
    SimConfig wc;
    wc.workers = workers;
    const int nw = sim_workers(wc, chunks);
    const std::size_t ny = ys.size();
    // Per-chunk exceedance counts, merged in chunk order.
    std::vector<std::vector<long long>> sum_counts(chunks, std::vector<long long>(ny, 0)),
        max_counts(chunks, std::vector<long long>(ny, 0));
    std::vector<double> maxima(static_cast<std::size_t>(snapshots));
    run_chunks(snapshots, chunk, nw, seed, [&](Rng& rng, long long first, long long n) {
        const auto ci = static_cast<std::size_t>(first / chunk);
        for (long long t = 0; t < n; ++t) {
            const Snapshot s = sample_ppp(spec.intensity, win, rng);
            double sum = 0.0, mx = 0.0;
            for (double r : s.points) {
                const double g = path_gain(r, spec.alpha);
                sum += g;
                mx = std::max(mx, g);
            }
            maxima[static_cast<std::size_t>(first + t)] = mx;
            for (std::size_t j = 0; j < ny; ++j) {
                if (sum > ys[j]) ++sum_counts[ci][j];
                if (mx > ys[j]) ++max_counts[ci][j];
            }
        }
        return 0LL;
    });

    SumMaxResult out;
    out.window_radius = R;
    out.plan = plan_text(snapshots, chunk, seed);
    for (std::size_t j = 0; j < ny; ++j) {
        long long ks = 0, km = 0;
        for (long long c = 0; c < chunks; ++c) {
            ks += sum_counts[c][j];
            km += max_counts[c][j];
        }
        const double ps = double(ks) / snapshots, pm = double(km) / snapshots;
        out.rows.push_back({ys[j], ps, pm, ks, km, half_width(ps, snapshots, confidence),
                            half_width(pm, snapshots, confidence), km > 0 ? double(ks) / double(km) : inf});
    }
    std::sort(maxima.begin(), maxima.end());
    out.max_samples = std::move(maxima);
    return out;
}

double ks_statistic(const std::vector<double>& sorted, const std::function<double(double)>& cdf) {
    const double n = static_cast<double>(sorted.size());
    if (sorted.empty()) throw std::invalid_argument("KS statistic needs samples");
    double D = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double F = cdf(sorted[i]);
        D = std::max({D, (i + 1) / n - F, F - i / n});
    }
    return std::sqrt(n) * D;
}

}  // namespace txcap
