#pragma once

// Gauss-Legendre panel quadrature for smooth integrands on finite intervals.

#include <functional>
#include <vector>

namespace isoq {

// Nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Rule of the given order, computed once by Newton iteration on P_n and cached.
const GaussRule& gauss_legendre(int order);

// Fixed-panel integration of f over [a, b].
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order = 24);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;  // change over the last panel doubling
    bool converged = false;
    int panels = 0;
};

// Doubles the panel count until successive results differ by less than
// tol * max(1, |I|), starting from 4 panels.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol = 1e-10, int max_panels = 4096, int order = 24);

}  // namespace isoq
