#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace txcap {

// Raised when a root, bracket or integral cannot be obtained. Parameter
// violations use std::invalid_argument / std::domain_error instead.
class numerical_failure : public std::runtime_error {
public:
    explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

namespace num {

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod on a finite interval; f should be smooth.
double integrate(const Fn& f, double a, double b, double rel_tol = 1e-12);

// Tanh-sinh on a finite interval; tolerates integrable endpoint singularities.
double integrate_singular(const Fn& f, double a, double b, double rel_tol = 1e-12);

// Same, but f receives (x, x - a) with x - a computed without cancellation,
// for integrands singular like (x - a)^-p at the left end.
double integrate_left_singular(const std::function<double(double, double)>& f,
                               double a, double b, double rel_tol = 1e-12);

// Integral over [a, inf).
double integrate_to_inf(const Fn& f, double a, double rel_tol = 1e-12);

// Bracketed bisection; f(lo) and f(hi) must differ in sign.
double bisect(const Fn& f, double lo, double hi, double x_tol = 0.0, int max_iter = 400);

// Argmax of a unimodal function on [lo, hi] by golden-section search.
double golden_max(const Fn& f, double lo, double hi, double x_tol = 1e-10);

}  // namespace num
}  // namespace txcap
