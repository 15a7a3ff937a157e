#pragma once

#include <complex>
#include <initializer_list>

namespace grl {

using cplx = std::complex<double>;

// Hypergeometric parameters. c must not be zero or a negative integer.
struct Params {
    double a = 0, b = 0, c = 1;

    Params() = default;
    Params(double a_, double b_, double c_);
};

// log|Gamma(x)| together with the sign of Gamma(x).
struct GammaSign {
    double log_abs = 0;
    int sign = 1;

    double value() const;
};

enum class Bank { upper, lower };

bool is_nonpos_int(double x);
bool is_integer(double x);
double dist_to_int(double x);

GammaSign gamma_sign(double x);   // throws PoleError at 0, -1, -2, ...
double rgamma(double x);          // 1/Gamma(x), zero at the poles

// prod Gamma(num) / prod Gamma(den). Denominator poles give 0, numerator
// poles throw PoleError.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

// (z)_r = Gamma(z+r)/Gamma(z) for any integer r.
double pochhammer(double z, int r);

// Plain Maclaurin series, |z| < 1. Exposed for tests and as an oracle path.
cplx hyp2f1_series(double a, double b, double c, cplx z, double tol = 1e-16);

// Principal branch on C \ [1, inf).
cplx hyp2f1(const Params& p, cplx z, double tol = 1e-14);
// Same without constructing Params (c is still checked).
cplx hyp2f1(double a, double b, double c, cplx z, double tol = 1e-14);

// Limit value from the chosen side of the cut, x > 1.
cplx hyp2f1_on_cut(const Params& p, double x, Bank bank, double tol = 1e-12);

// Value on the upper bank obtained by continuing the ODE solution along a
// path in the upper half-plane; no extrapolation.
cplx hyp2f1_upper_bank_ode(double a, double b, double c, double x);

// |2F1(a,b;c;x +- i0)|^2 for x > 1.
double abs2_on_cut(const Params& p, double x, double tol = 1e-12);
// Same with x - 1 given directly, for x close to 1.
double abs2_on_cut_xm1(const Params& p, double xm1, double tol = 1e-12);

} // namespace grl
