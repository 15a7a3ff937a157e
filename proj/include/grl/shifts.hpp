#pragma once

#include "grl/hyp2f1.hpp"
#include "grl/poly.hpp"
#include "grl/rational.hpp"

#include <vector>

namespace grl {

// Integer shifts (n1, n2, m) of R(z) = 2F1(a+n1, b+n2; c+m; z) / 2F1(a, b; c; z)
// and the derived quantities used throughout.
struct Shifts {
    int n1 = 0, n2 = 0, m = 0;
    int n_min = 0, n_max = 0;
    int p = 0, l = 0;
    int r = -1;
};

Shifts derive_shifts(int n1, int n2, int m);

double compute_B(const Params& p, const Shifts& s);

struct ABG {
    double alpha, beta, gamma;
};
inline ABG default_abg(const Params& p) { return {p.a, 1 - p.c + p.a, 1 - p.b + p.a}; }

// P_r from the Taylor coefficients of the two-product identity.
RealPoly compute_Pr_taylor(const Params& p, const Shifts& s, const ABG& abg);
inline RealPoly compute_Pr_taylor(const Params& p, const Shifts& s) {
    return compute_Pr_taylor(p, s, default_abg(p));
}

// P_r from the explicit double sum over terminating 4F3(1) values.
RealPoly compute_Pr_closed(const Params& p, const Shifts& s);

// Taylor path, then closed form, then a symmetric parameter limit when both
// hit Pochhammer poles (a - b integer and similar).
RealPoly compute_Pr(const Params& p, const Shifts& s);

struct BoundaryDensity {
    Params params;
    Shifts shifts;
    double B = 0;
    RealPoly P;

    // B * P_r(t)
    RealPoly BP() const { return B * P; }
    // pi^{-1} Im R(x + i0) without the 1/|2F1|^2 factor
    double numerator(double x) const;
};

BoundaryDensity boundary_density(const Params& p, const Shifts& s);

double boundary_im(const Params& p, const Shifts& s, double x, Bank bank, double tol = 1e-10);
double boundary_im(const BoundaryDensity& d, double x, Bank bank, double tol = 1e-10);

// Taylor coefficients R_k, k < count, by formal series division.
std::vector<double> ratio_taylor(const Params& p, const Shifts& s, int count);
std::vector<Rational> ratio_taylor_exact(const Rational& a, const Rational& b, const Rational& c,
                                         const Shifts& s, int count);

// Closed remark formula for the coefficient of z.
double ratio_taylor1_closed(const Params& p, const Shifts& s);

double ratio_at_one(const Params& p, const Shifts& s);

// Direct evaluation of the ratio off the cut and on the banks.
cplx ratio(const Params& p, const Shifts& s, cplx z, double tol = 1e-14);
cplx ratio_on_cut(const Params& p, const Shifts& s, double x, Bank bank, double tol = 1e-12);

// p(z) 2F1(a+n1,b+n2;c+m;z) = q(z) 2F1(a,b+1;c+1;z) + r(z) 2F1(a,b;c;z),
// p, q, r coprime with p monic.
struct Ladder {
    RealPoly p, q, r;
};

struct RationalPoly {
    std::vector<Rational> coeffs;
};
struct LadderExact {
    RationalPoly p, q, r;
};

LadderExact contiguous_ladder_exact(const Rational& a, const Rational& b, const Rational& c, const Shifts& s);
Ladder contiguous_ladder(const Params& p, const Shifts& s);

} // namespace grl
