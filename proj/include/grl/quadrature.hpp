#pragma once

#include "grl/hyp2f1.hpp"

#include <functional>
#include <vector>

namespace grl {

// Nodes and weights on [0, 1] for the weight t^alpha (1-t)^beta, alpha, beta > -1.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Golub-Welsch on the Jacobi matrix; rules are cached.
const GaussRule& gauss_jacobi01(int n, double alpha, double beta);
inline const GaussRule& gauss_legendre01(int n) { return gauss_jacobi01(n, 0.0, 0.0); }

struct QuadOptions {
    double tol = 1e-12;    // relative
    int max_nodes = 512;   // largest global Gauss-Jacobi rule
    int max_panels = 4000; // adaptive fallback budget
};

struct QuadratureResult {
    cplx value{0, 0};
    double abs_error_estimate = 0;
    int nodes_used = 0;
};

// A point of (0, 1) with both t and 1 - t and their logarithms kept accurate,
// so integrands can be evaluated in log space near either end. The integrand
// must return f(t) * exp(log_jac); t itself may have underflowed to 0.
struct UnitPoint {
    double t, omt;
    double log_t, log_omt;
    double log_jac;
};

// Full integrand f(t) = t^alpha (1-t)^beta g(t) on (0, 1).
using UnitIntegrand = std::function<cplx(const UnitPoint&)>;

// int_0^1 f where f ~ t^alpha at 0 and f ~ (1-t)^beta at 1, up to smoother or
// logarithmic corrections. alpha = -1 is allowed for a t^-1 log^-2 t end.
// Global Gauss-Jacobi for the weight t^alpha (1-t)^beta with node doubling
// first (skipped when an exponent is <= -1), then adaptive panels: endpoint
// panels t = h exp(-L tan theta) with L matched to the exponent, interior
// panels plain Gauss-Legendre.
QuadratureResult integrate_unit(const UnitIntegrand& f, double alpha, double beta, const QuadOptions& opt = {});

// Adaptive Gauss-Legendre on [lo, hi] (finite), error from 16 vs 32 nodes per panel.
QuadratureResult integrate_adaptive(const std::function<cplx(double)>& f, double lo, double hi,
                                    const QuadOptions& opt = {});

} // namespace grl
