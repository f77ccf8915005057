#include "txcap/numeric.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>

namespace txcap::num {

namespace bq = boost::math::quadrature;

double integrate(const Fn& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    double err = 0.0;
    return bq::gauss_kronrod<double, 31>::integrate(f, a, b, 20, rel_tol, &err);
}

double integrate_singular(const Fn& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    static thread_local bq::tanh_sinh<double> ts(15);
    double err = 0.0, l1 = 0.0;
    return ts.integrate(f, a, b, rel_tol, &err, &l1);
}

double integrate_left_singular(const std::function<double(double, double)>& f,
                               double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    static thread_local bq::tanh_sinh<double> ts(15);
    const double mid = 0.5 * (a + b);
    // Boost passes xc = a - x on the left half and b - x on the right half.
    auto g = [&](double x, double xc) {
        const double s = (x < mid) ? -xc : x - a;
        return f(x, s);
    };
    double err = 0.0, l1 = 0.0;
    return ts.integrate(g, a, b, rel_tol, &err, &l1);
}

double integrate_to_inf(const Fn& f, double a, double rel_tol) {
    static thread_local bq::exp_sinh<double> es(12);
    double err = 0.0, l1 = 0.0;
    auto g = [&](double t) { return f(a + t); };
    return es.integrate(g, rel_tol, &err, &l1);
}

double bisect(const Fn& f, double lo, double hi, double x_tol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::isnan(flo) || std::isnan(fhi) || (flo > 0) == (fhi > 0))
        throw numerical_failure("bisection interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (x_tol > 0 && hi - lo <= x_tol) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double golden_max(const Fn& f, double lo, double hi, double x_tol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > x_tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        }
        if (hi - lo <= std::numeric_limits<double>::epsilon() * (std::fabs(lo) + std::fabs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace txcap::num
