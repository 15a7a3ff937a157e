#pragma once

#include "grl/asymptotics.hpp"
#include "grl/nevanlinna.hpp"
#include "grl/quadrature.hpp"
#include "grl/shifts.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grl {

// R(z) = Q(z) + sum_{k<N} R_k z^k
//        + z^N B int_0^1 t^{a+b+n_min+N-1} (1-t)^{c-a-b-l} P_r(t) / (|2F1(a,b;c;1/t)|^2 (1 - z t)) dt
struct Representation {
    Params params;
    Shifts shifts;
    int N = 0;
    RealPoly Q;
    std::vector<double> taylor_head; // Taylor coefficients of R - Q below z^N
    BoundaryDensity density;
    double t_exponent = 0;   // a+b+n_min+N-1
    double omt_exponent = 0; // c-a-b-l
    // exponents of the whole integrand at t = 0 and t = 1 (|2F1|^-2 included)
    double t_exponent_eff = 0;
    double omt_exponent_eff = 0;
    RunckelCondition runckel = RunckelCondition::none;
    AsymptoticAtOne at_one;
    AsymptoticAtInfinity at_infinity;
};

// order < 0 takes the minimal N; a larger order moves more Taylor terms of R - Q
// into the head and raises the power of t in the measure.
Representation build_representation(const Params& p, const Shifts& s, int order = -1);

// log |2F1(a,b;c;x +- i0)|^2, x > 1 given through log x; leading terms at
// infinity once x > 1e6.
double log_abs2_on_cut(const Params& p, double log_x);

// B t^alpha (1-t)^beta P_r(t) / |2F1(a,b;c;1/t)|^2, the measure density on (0,1)
double representation_density(const Representation& rep, double t);

QuadratureResult eval_representation(const Representation& rep, cplx z, double tol = 1e-10, int max_nodes = 512);

enum class Moment { z0, z1, z01 };
const char* to_string(Moment m);

struct MomentCheck {
    double lhs = 0, rhs = 0;
    double lhs_error = 0;
};

MomentCheck moment_identity_check(const Representation& rep, Moment which, double tol = 1e-12);

// z / log(1+z) = 1 + z int_1^inf dx / ((log^2(x-1) + pi^2)(x + z)), z > -1
struct IdentityCheck {
    double z = 0;
    double lhs = 0, rhs = 0;
    double residual = 0;
    double error_estimate = 0;
};
IdentityCheck example12_identity(double z, double tol = 1e-13);

struct ExampleRow {
    cplx z;
    cplx representation, direct;
    double rel_error = 0;
    double error_estimate = 0;
    int nodes = 0;
};

struct ExampleReport {
    int index = 0;
    Params params;
    Shifts shifts;
    int N = 0;
    RealPoly Q;
    RunckelCondition runckel = RunckelCondition::none;
    std::vector<ExampleRow> rows;
    double max_rel_error = 0;
    // closed-form B*P_r against the computed one, max relative deviation on a t grid
    double bp_formula_deviation = 0;
    // |R(-T) - Q(-T)| / T^N at T = 1e6 over the same at T = 1e3
    double q_tail_ratio = 0;
    std::optional<IdentityCheck> identity; // example 12 only
};

std::vector<cplx> default_z_grid();

// InapplicableParameters names the failed hypothesis.
ExampleReport verify_example(int idx, const Params& p, const std::vector<cplx>& z_grid, double tol = 1e-10);

} // namespace grl
