#include "txcap/fading.hpp"

#include "txcap/numeric.hpp"
#include "txcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace txcap {

// ---- TabulatedCdf ----------------------------------------------------------

TabulatedCdf::TabulatedCdf(std::vector<double> x, std::vector<double> F) : x_(std::move(x)), F_(std::move(F)) {
    const std::size_t n = x_.size();
    if (n < 2 || F_.size() != n) throw std::invalid_argument("tabulated CDF needs at least two matching nodes");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(x_[i + 1] > x_[i])) throw std::invalid_argument("tabulated CDF nodes must be strictly increasing");
        if (F_[i + 1] < F_[i]) throw std::invalid_argument("tabulated CDF values must be nondecreasing");
    }
    if (F_.front() != 0.0 || F_.back() != 1.0)
        throw std::invalid_argument("tabulated CDF must run from 0 to 1");

    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (F_[i + 1] - F_[i]) / (x_[i + 1] - x_[i]);
    m_.assign(n, 0.0);
    m_[0] = delta[0];
    m_[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        m_[i] = (delta[i - 1] * delta[i] <= 0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (delta[i] == 0.0) {
            m_[i] = m_[i + 1] = 0.0;
            continue;
        }
        const double a = m_[i] / delta[i], b = m_[i + 1] / delta[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double t = 3.0 / std::sqrt(s);
            m_[i] = t * a * delta[i];
            m_[i + 1] = t * b * delta[i];
        }
    }
}

std::size_t TabulatedCdf::segment(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - x_.begin());
    if (k == 0) return 0;
    return std::min(k - 1, x_.size() - 2);
}

double TabulatedCdf::cdf(double x) const {
    if (x <= x_.front()) return F_.front();
    if (x >= x_.back()) return 1.0;
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k], t = (x - x_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * F_[k] + (t3 - 2 * t2 + t) * h * m_[k] +
                     (-2 * t3 + 3 * t2) * F_[k + 1] + (t3 - t2) * h * m_[k + 1];
    return std::clamp(v, 0.0, 1.0);
}

double TabulatedCdf::pdf(double x) const {
    if (x < x_.front() || x > x_.back()) return 0.0;
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k], t = (x - x_[k]) / h;
    const double t2 = t * t;
    const double v = (6 * t2 - 6 * t) / h * F_[k] + (3 * t2 - 4 * t + 1) * m_[k] +
                     (-6 * t2 + 6 * t) / h * F_[k + 1] + (3 * t2 - 2 * t) * m_[k + 1];
    return std::max(v, 0.0);
}

double TabulatedCdf::quantile(double u) const {
    if (u <= 0) return x_.front();
    if (u >= 1) return x_.back();
    auto it = std::upper_bound(F_.begin(), F_.end(), u);
    std::size_t k = static_cast<std::size_t>(it - F_.begin());
    k = std::clamp<std::size_t>(k, 1, x_.size() - 1) - 1;
    double lo = x_[k], hi = x_[k + 1];
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double TabulatedCdf::integrate_against(const std::function<double(double)>& g, double a, double b) const {
    a = std::max(a, x_.front());
    b = std::min(b, x_.back());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < x_.size(); ++k) {
        const double lo = std::max(a, x_[k]), hi = std::min(b, x_[k + 1]);
        if (hi <= lo) continue;
        total += num::integrate_singular([&](double x) { return g(x) * pdf(x); }, lo, hi);
    }
    return total;
}

// ---- FadeDistribution ------------------------------------------------------

FadeDistribution FadeDistribution::degenerate(double value) {
    if (!(value > 0)) throw std::invalid_argument("degenerate fade value must be positive");
    FadeDistribution f;
    f.kind_ = Kind::degenerate;
    f.value_ = value;
    return f;
}

FadeDistribution FadeDistribution::rayleigh() {
    FadeDistribution f;
    f.kind_ = Kind::rayleigh;
    return f;
}

FadeDistribution FadeDistribution::tabulated(std::vector<double> h, std::vector<double> cdf) {
    if (h.empty() || h.front() < 0) throw std::invalid_argument("fade support must be nonnegative");
    FadeDistribution f;
    f.kind_ = Kind::tabulated;
    f.table_ = TabulatedCdf(std::move(h), std::move(cdf));
    return f;
}

double FadeDistribution::cdf(double h) const {
    switch (kind_) {
        case Kind::degenerate: return h >= value_ ? 1.0 : 0.0;
        case Kind::rayleigh: return h <= 0 ? 0.0 : -std::expm1(-h);
        default: return table_.cdf(h);
    }
}

double FadeDistribution::ccdf(double h) const {
    switch (kind_) {
        case Kind::degenerate: return h < value_ ? 1.0 : 0.0;
        case Kind::rayleigh: return h <= 0 ? 1.0 : std::exp(-h);
        default: return 1.0 - table_.cdf(h);
    }
}

double FadeDistribution::pdf(double h) const {
    switch (kind_) {
        case Kind::degenerate: return 0.0;
        case Kind::rayleigh: return h < 0 ? 0.0 : std::exp(-h);
        default: return table_.pdf(h);
    }
}

double FadeDistribution::frac_moment(double p) const {
    switch (kind_) {
        case Kind::degenerate: return std::pow(value_, p);
        case Kind::rayleigh: return p <= -1.0 ? inf : gamma_fn(1.0 + p);
        default:
            if (p <= -1.0 && table_.lo() == 0.0 && table_.pdf(0.0) > 0) return inf;
            return table_.integrate_against([p](double h) { return std::pow(h, p); }, table_.lo(), table_.hi());
    }
}

double FadeDistribution::cond_neg_moment(double p, double floor) const {
    if (floor <= 0) return frac_moment(-p);
    switch (kind_) {
        case Kind::degenerate: return value_ > floor ? std::pow(value_, -p) : 0.0;
        case Kind::rayleigh: return incomplete_gamma(1.0 - p, floor, inf);
        default:
            return table_.integrate_against([p](double h) { return std::pow(h, -p); }, floor, table_.hi());
    }
}

double FadeDistribution::mgf_neg_power(double p, double theta) const {
    if (theta < 0) throw std::invalid_argument("mgf_neg_power requires theta >= 0");
    if (theta == 0) return 1.0;
    auto g = [p, theta](double h) { return h > 0 ? std::exp(-theta * std::pow(h, -p)) : 0.0; };
    switch (kind_) {
        case Kind::degenerate: return g(value_);
        case Kind::rayleigh: {
            auto f = [&](double h) { return g(h) * std::exp(-h); };
            const double peak = std::pow(theta * p, 1.0 / (p + 1.0));
            return num::integrate_singular(f, 0.0, peak) + num::integrate_to_inf(f, peak);
        }
        default: return table_.integrate_against(g, table_.lo(), table_.hi());
    }
}

double FadeDistribution::expect_above(const std::function<double(double)>& g, double floor) const {
    switch (kind_) {
        case Kind::degenerate: return value_ > floor ? g(value_) : 0.0;
        case Kind::rayleigh: {
            // Tail beyond floor + 50 carries mass below e^-50 relative to the head.
            const double lo = std::max(floor, 0.0);
            auto f = [&](double h) { return g(h) * std::exp(-h); };
            return num::integrate_singular(f, lo, lo + 1.0) + num::integrate(f, lo + 1.0, lo + 50.0);
        }
        default: return table_.integrate_against(g, std::max(floor, table_.lo()), table_.hi());
    }
}

double FadeDistribution::expect_excess(const std::function<double(double)>& g, double floor) const {
    switch (kind_) {
        case Kind::degenerate: return value_ > floor ? g(value_ - floor) : 0.0;
        case Kind::rayleigh: {
            // Memoryless: the excess over floor is again unit exponential.
            const double lo = std::max(floor, 0.0);
            auto f = [&](double s) { return g(s + (lo - floor)) * std::exp(-s); };
            return std::exp(-lo) * (num::integrate_singular(f, 0.0, 1.0) + num::integrate(f, 1.0, 50.0));
        }
        default: {
            const double lo = std::max(floor, table_.lo());
            double total = 0.0;
            for (double a = lo; a < table_.hi();) {
                auto it = std::upper_bound(table_.nodes().begin(), table_.nodes().end(), a);
                const double b = it == table_.nodes().end() ? table_.hi() : *it;
                total += num::integrate_left_singular(
                    [&](double h, double s) { return g(s + (a - floor)) * table_.pdf(h); }, a, b);
                a = b;
            }
            return total;
        }
    }
}

double FadeDistribution::support_lo() const {
    switch (kind_) {
        case Kind::degenerate: return value_;
        case Kind::rayleigh: return 0.0;
        default: return table_.lo();
    }
}

double FadeDistribution::support_hi() const {
    switch (kind_) {
        case Kind::degenerate: return value_;
        case Kind::rayleigh: return 50.0;
        default: return table_.hi();
    }
}

double FadeDistribution::ccdf_inverse(double p) const {
    if (!(p > 0 && p <= 1)) throw std::invalid_argument("ccdf level must lie in (0, 1]");
    switch (kind_) {
        case Kind::degenerate: return value_;
        case Kind::rayleigh: return -std::log(p);
        default: return table_.quantile(1.0 - p);
    }
}

double FadeDistribution::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::degenerate: return value_;
        case Kind::rayleigh: return rng.exponential();
        default: return table_.quantile(rng.uniform());
    }
}

double FadeDistribution::sample_above(double floor, Rng& rng) const {
    switch (kind_) {
        case Kind::degenerate:
            if (!(value_ > floor)) throw std::invalid_argument("fade threshold exceeds the degenerate value");
            return value_;
        case Kind::rayleigh: return std::max(floor, 0.0) + rng.exponential();
        default: {
            const double F0 = table_.cdf(floor);
            if (F0 >= 1.0) throw std::invalid_argument("fade threshold beyond the tabulated support");
            return table_.quantile(F0 + rng.uniform() * (1.0 - F0));
        }
    }
}

// ---- LinkDistanceLaw -------------------------------------------------------

LinkDistanceLaw LinkDistanceLaw::fixed(double u) {
    if (!(u > 0)) throw std::invalid_argument("link distance must be positive");
    LinkDistanceLaw l;
    l.kind_ = Kind::fixed;
    l.u_ = u;
    return l;
}

LinkDistanceLaw LinkDistanceLaw::nearest_neighbor(double mu, int d) {
    if (!(mu > 0)) throw std::invalid_argument("base-station intensity mu must be positive");
    LinkDistanceLaw l;
    l.kind_ = Kind::nearest_neighbor;
    l.mu_ = mu;
    l.d_ = d;
    ball_coeff(d);
    return l;
}

LinkDistanceLaw LinkDistanceLaw::tabulated(std::vector<double> u, std::vector<double> cdf, int d) {
    if (u.empty() || u.front() < 0) throw std::invalid_argument("link distances must be nonnegative");
    LinkDistanceLaw l;
    l.kind_ = Kind::tabulated;
    l.d_ = d;
    ball_coeff(d);
    l.table_ = TabulatedCdf(std::move(u), std::move(cdf));
    return l;
}

double LinkDistanceLaw::cdf(double u) const {
    switch (kind_) {
        case Kind::fixed: return u >= u_ ? 1.0 : 0.0;
        case Kind::nearest_neighbor: return u <= 0 ? 0.0 : -std::expm1(-mu_ * ball_coeff(d_) * std::pow(u, d_));
        default: return table_.cdf(u);
    }
}

double LinkDistanceLaw::pdf(double u) const {
    switch (kind_) {
        case Kind::fixed: return 0.0;
        case Kind::nearest_neighbor: {
            if (u < 0) return 0.0;
            const double a = mu_ * ball_coeff(d_);
            return a * d_ * std::pow(u, d_ - 1) * std::exp(-a * std::pow(u, d_));
        }
        default: return table_.pdf(u);
    }
}

double LinkDistanceLaw::moment(double p) const {
    switch (kind_) {
        case Kind::fixed: return std::pow(u_, p);
        case Kind::nearest_neighbor:
            return gamma_fn(1.0 + p / d_) / std::pow(mu_ * ball_coeff(d_), p / d_);
        default: return expect([p](double u) { return std::pow(u, p); });
    }
}

double LinkDistanceLaw::mgf_neg_power_d(double theta) const {
    if (theta < 0) throw std::invalid_argument("mgf argument must be nonnegative");
    switch (kind_) {
        case Kind::fixed: return std::exp(-theta * std::pow(u_, d_));
        case Kind::nearest_neighbor: {
            const double a = mu_ * ball_coeff(d_);
            return a / (a + theta);
        }
        default: {
            const int d = d_;
            return expect([theta, d](double u) { return std::exp(-theta * std::pow(u, d)); });
        }
    }
}

double LinkDistanceLaw::expect(const std::function<double(double)>& g) const {
    switch (kind_) {
        case Kind::fixed: return g(u_);
        case Kind::nearest_neighbor: {
            // s = mu c_d u^d is unit exponential.
            const double a = mu_ * ball_coeff(d_);
            const double inv_d = 1.0 / d_;
            auto f = [&](double s) { return g(std::pow(s / a, inv_d)) * std::exp(-s); };
            return num::integrate_singular(f, 0.0, 1.0) + num::integrate_to_inf(f, 1.0);
        }
        default: return table_.integrate_against(g, table_.lo(), table_.hi());
    }
}

double LinkDistanceLaw::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::fixed: return u_;
        case Kind::nearest_neighbor:
            return std::pow(rng.exponential() / (mu_ * ball_coeff(d_)), 1.0 / d_);
        default: return table_.quantile(rng.uniform());
    }
}

}  // namespace txcap
