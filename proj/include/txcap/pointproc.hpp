#pragma once

#include "txcap/fading.hpp"
#include "txcap/rng.hpp"

#include <vector>

namespace txcap {

// Annulus a_d(o, r_inner, r_outer).
struct Window {
    int d = 2;
    double r_inner = 0.0;
    double r_outer = 1.0;

    Window() = default;
    Window(int dim, double inner, double outer);
    double volume() const;
};

// Distances from the origin, ascending, with optional parallel marks.
struct Snapshot {
    std::vector<double> points;
    std::vector<double> marks;

    std::size_t size() const { return points.size(); }
    bool marked() const { return !marks.empty(); }
};

// Homogeneous PPP in the window; angles are never materialized.
Snapshot sample_ppp(double intensity, const Window& window, RngStream rng);
Snapshot sample_ppp(double intensity, const Window& window, Rng& rng);

// n points uniform in the ball b_d(o, radius).
Snapshot sample_bpp(int n, double radius, int d, RngStream rng);
Snapshot sample_bpp(int n, double radius, int d, Rng& rng);

double void_probability(double intensity, int d, double r);

// lambda c_d |x|^d / 2: the distance of the matching point of a unit 1-D PPP.
double map_distance_to_unit_1d(double distance, double intensity, int d);

// Density of the k-th nearest distance.
double ordered_distance_pdf(int k, double intensity, int d, double t);

Snapshot attach_marks(Snapshot snapshot, const FadeDistribution& law, RngStream rng);
Snapshot attach_marks(Snapshot snapshot, const FadeDistribution& law, Rng& rng);

}  // namespace txcap
