#include "txcap/pointproc.hpp"

#include "txcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace txcap {

Window::Window(int dim, double inner, double outer) : d(dim), r_inner(inner), r_outer(outer) {
    ball_coeff(dim);
    if (!(inner >= 0)) throw std::invalid_argument("window inner radius must be nonnegative");
    if (!(outer > inner)) throw std::invalid_argument("window outer radius must exceed inner radius");
}

double Window::volume() const { return ball_coeff(d) * (std::pow(r_outer, d) - std::pow(r_inner, d)); }

Snapshot sample_ppp(double intensity, const Window& window, Rng& rng) {
    if (!(intensity >= 0)) throw std::invalid_argument("intensity must be nonnegative");
    Snapshot s;
    if (intensity == 0) return s;
    const double mean = intensity * window.volume();
    std::poisson_distribution<long long> count(mean);
    const long long n = count(rng);
    const double lo = std::pow(window.r_inner, window.d);
    const double span = std::pow(window.r_outer, window.d) - lo;
    const double inv_d = 1.0 / window.d;
    s.points.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) s.points.push_back(std::pow(lo + rng.uniform() * span, inv_d));
    // stable_sort keeps insertion order on exact ties.
    std::stable_sort(s.points.begin(), s.points.end());
    return s;
}

Snapshot sample_ppp(double intensity, const Window& window, RngStream stream) {
    Rng rng(stream);
    return sample_ppp(intensity, window, rng);
}

Snapshot sample_bpp(int n, double radius, int d, Rng& rng) {
    if (n < 0) throw std::invalid_argument("point count must be nonnegative");
    if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
    ball_coeff(d);
    Snapshot s;
    s.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.points.push_back(radius * std::pow(rng.uniform(), 1.0 / d));
    std::stable_sort(s.points.begin(), s.points.end());
    return s;
}

Snapshot sample_bpp(int n, double radius, int d, RngStream stream) {
    Rng rng(stream);
    return sample_bpp(n, radius, d, rng);
}

double void_probability(double intensity, int d, double r) {
    if (!(r >= 0)) throw std::invalid_argument("radius must be nonnegative");
    return std::exp(-intensity * ball_volume(d, r));
}

double map_distance_to_unit_1d(double distance, double intensity, int d) {
    if (!(distance >= 0)) throw std::invalid_argument("distance must be nonnegative");
    return 0.5 * intensity * ball_volume(d, distance);
}

double ordered_distance_pdf(int k, double intensity, int d, double t) {
    if (k < 1) throw std::invalid_argument("order index k must be at least 1");
    if (!(t >= 0)) throw std::invalid_argument("distance must be nonnegative");
    if (t == 0) return (k == 1 && d == 1) ? intensity * ball_coeff(d) : 0.0;
    const double m = intensity * ball_volume(d, t);
    return d * std::exp(k * std::log(m) - m - log_gamma(k)) / t;
}

Snapshot attach_marks(Snapshot snapshot, const FadeDistribution& law, Rng& rng) {
    if (snapshot.marked()) throw std::invalid_argument("snapshot is already marked");
    snapshot.marks.resize(snapshot.points.size());
    for (double& h : snapshot.marks) h = law.sample(rng);
    return snapshot;
}

Snapshot attach_marks(Snapshot snapshot, const FadeDistribution& law, RngStream stream) {
    Rng rng(stream);
    return attach_marks(std::move(snapshot), law, rng);
}

}  // namespace txcap
