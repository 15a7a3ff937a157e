#include "grl/hyp2f1.hpp"
#include "grl/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace grl {

namespace {

constexpr double kIntTol = 1e-12;
// Closer than this to an integer and the two-term connection formulas lose
// too many digits to cancellation; the ODE path takes over.
constexpr double kNearIntConnection = 1e-5;

double log_abs_gamma(double x) {
#if defined(__GLIBC__)
    int s = 0;
    return ::lgamma_r(x, &s);
#else
    return std::lgamma(x);
#endif
}

std::string num(double x) { return std::to_string(x); }

cplx kahan_add(cplx sum, cplx term, cplx& comp) {
    cplx y = term - comp;
    cplx t = sum + y;
    comp = (t - sum) - y;
    return t;
}

// Finite sum when a or b is a non-positive integer.
cplx poly_2f1(double a, double b, double c, cplx z) {
    double n_a = is_nonpos_int(a) ? -std::round(a) : HUGE_VAL;
    double n_b = is_nonpos_int(b) ? -std::round(b) : HUGE_VAL;
    int deg = static_cast<int>(std::min(n_a, n_b));
    if (n_a <= n_b) a = -n_a; else b = -n_b;
    cplx sum = 1.0, comp = 0.0, term = 1.0;
    for (int n = 0; n < deg; ++n) {
        double den = (c + n) * (n + 1);
        if (den == 0) fail("PoleError", "c + n hits zero inside a terminating series");
        term *= (a + n) * (b + n) / den * z;
        sum = kahan_add(sum, term, comp);
    }
    return sum;
}

// One Taylor step of w'' (z(1-z)) + (c - (a+b+1)z) w' - ab w = 0 from z0 to z0+h.
// e_k = c_k h^k keeps the magnitudes tame.
void taylor_step(double a, double b, double c, cplx z0, cplx h, cplx& w, cplx& dw) {
    const cplx p0 = z0 * (1.0 - z0);
    const cplx p1 = 1.0 - 2.0 * z0;
    const double p2 = -1.0;
    const cplx q0 = c - (a + b + 1) * z0;
    const double q1 = -(a + b + 1);
    const double r0 = -a * b;

    cplx e0 = w, e1 = dw * h;
    cplx W = e0 + e1;
    cplx D = e1;  // sum k e_k, divided by h at the end
    int quiet = 0;
    for (int n = 0; n < 4000; ++n) {
        const double dn = n;
        cplx e2 = -((p1 * dn + q0) * (dn + 1) * e1 * h
                    + (p2 * dn * (dn - 1) + q1 * dn + r0) * e0 * h * h)
                  / (p0 * (dn + 2) * (dn + 1));
        W += e2;
        D += (dn + 2) * e2;
        const double scale = std::abs(W) + std::abs(D);
        if (std::abs(e2) * (dn + 3) <= 1e-17 * scale) {
            if (++quiet >= 3) {
                w = W;
                dw = D / h;
                return;
            }
        } else {
            quiet = 0;
        }
        e0 = e1;
        e1 = e2;
    }
    fail("NonConvergence", "Taylor step of the hypergeometric ODE did not converge");
}

// Analytic continuation along a polyline in the closed upper half-plane.
// For real z > 1 this returns the value on the upper bank.
cplx ode_continue(double a, double b, double c, cplx z) {
    std::vector<cplx> pts;
    const double r = std::abs(z);
    if (z.real() > 1.0 || (z.real() > 0.5 && z.imag() < 0.5)) {
        const double X = std::max(z.real(), 1.0);
        pts = {cplx(0, 0.5), cplx(X, X), z};
    } else {
        pts = {0.5 * z / r, z};
    }
    cplx w = hyp2f1_series(a, b, c, pts[0]);
    cplx dw = (a * b / c) * hyp2f1_series(a + 1, b + 1, c + 1, pts[0]);
    cplx cur = pts[0];
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const cplx target = pts[k];
        for (int guard = 0; guard < 100000; ++guard) {
            cplx h = target - cur;
            if (std::abs(h) == 0) break;
            const double rho = std::min(std::abs(cur), std::abs(1.0 - cur));
            const double hmax = 0.5 * rho;
            bool last = true;
            if (std::abs(h) > hmax) {
                h *= hmax / std::abs(h);
                last = false;
            }
            taylor_step(a, b, c, cur, h, w, dw);
            cur = last ? target : cur + h;
            if (last) break;
        }
    }
    return w;
}

cplx f21_upper(double a, double b, double c, cplx z, double tol);

cplx f21(double a, double b, double c, cplx z, double tol) {
    if (z == cplx(0)) return 1.0;
    if (is_nonpos_int(a) || is_nonpos_int(b)) return poly_2f1(a, b, c, z);
    if (z.imag() < 0) return std::conj(f21_upper(a, b, c, std::conj(z), tol));
    return f21_upper(a, b, c, z, tol);
}

cplx f21_upper(double a, double b, double c, cplx z, double tol) {
    const double m0 = std::abs(z);
    if (m0 <= 0.5) return hyp2f1_series(a, b, c, z, tol);

    const double eta = c - a - b;
    const bool eta_ok = dist_to_int(eta) > kNearIntConnection;
    const bool ab_ok = dist_to_int(a - b) > kNearIntConnection;

    enum { kNone, kPfaff, kOne, kInf } pick = kNone;
    double best = 0.75;
    const double mP = std::abs(z / (z - 1.0));
    if (mP <= best) { best = mP; pick = kPfaff; }
    const double m1 = std::abs(1.0 - z);
    if (eta_ok && m1 <= 0.75 && (pick == kNone || m1 < best)) { best = m1; pick = kOne; }
    const double mI = 1.0 / m0;
    if (ab_ok && mI <= 0.75 && (pick == kNone || mI < best)) { best = mI; pick = kInf; }

    switch (pick) {
    case kPfaff: {
        // choose the numerator parameter that leaves the shorter series
        const cplx w = z / (z - 1.0);
        if (is_nonpos_int(c - b) || !is_nonpos_int(c - a))
            return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, w, tol);
        return std::pow(1.0 - z, -b) * hyp2f1_series(b, c - a, c, w, tol);
    }
    case kOne: {
        const cplx w = 1.0 - z;
        const double g1 = gamma_ratio({c, eta}, {c - a, c - b});
        const double g2 = gamma_ratio({c, -eta}, {a, b});
        cplx s = 0;
        if (g1 != 0) s += g1 * hyp2f1_series(a, b, 1 - eta, w, tol);
        if (g2 != 0) s += g2 * std::pow(w, eta) * hyp2f1_series(c - a, c - b, 1 + eta, w, tol);
        return s;
    }
    case kInf: {
        const cplx w = 1.0 / z;
        const cplx lmz = std::log(-z);
        const double ga = gamma_ratio({c, b - a}, {b, c - a});
        const double gb = gamma_ratio({c, a - b}, {a, c - b});
        cplx s = 0;
        if (ga != 0) s += ga * std::exp(-a * lmz) * hyp2f1_series(a, a - c + 1, a - b + 1, w, tol);
        if (gb != 0) s += gb * std::exp(-b * lmz) * hyp2f1_series(b, b - c + 1, b - a + 1, w, tol);
        return s;
    }
    case kNone:
        break;
    }
    return ode_continue(a, b, c, z);
}

} // namespace

Params::Params(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        fail("ParameterPole", "non-finite parameter");
    if (is_nonpos_int(c)) fail("ParameterPole", "c = " + num(c) + " is zero or a negative integer");
}

double GammaSign::value() const { return sign * std::exp(log_abs); }

double dist_to_int(double x) { return std::abs(x - std::round(x)); }

bool is_integer(double x) { return dist_to_int(x) <= kIntTol * std::max(1.0, std::abs(x)); }

bool is_nonpos_int(double x) { return x < 0.5 && is_integer(x); }

GammaSign gamma_sign(double x) {
    if (is_nonpos_int(x)) fail("PoleError", "Gamma pole at " + num(x));
    GammaSign g;
    g.log_abs = log_abs_gamma(x);
    if (x < 0) g.sign = (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
    return g;
}

double rgamma(double x) {
    if (is_nonpos_int(x)) return 0.0;
    if (x > 0 && x < 170) return 1.0 / std::tgamma(x);
    GammaSign g = gamma_sign(x);
    return g.sign * std::exp(-g.log_abs);
}

double gamma_ratio(std::initializer_list<double> num_args, std::initializer_list<double> den_args) {
    for (double d : den_args)
        if (is_nonpos_int(d)) return 0.0;
    double lg = 0;
    int sign = 1;
    for (double n : num_args) {
        GammaSign g = gamma_sign(n);
        lg += g.log_abs;
        sign *= g.sign;
    }
    for (double d : den_args) {
        GammaSign g = gamma_sign(d);
        lg -= g.log_abs;
        sign *= g.sign;
    }
    return sign * std::exp(lg);
}

double pochhammer(double z, int r) {
    if (r >= 0) {
        double p = 1;
        for (int k = 0; k < r; ++k) p *= z + k;
        return p;
    }
    double d = 1;
    for (int k = 1; k <= -r; ++k) {
        const double f = z - k;
        if (std::abs(f) <= kIntTol * std::max(1.0, std::abs(z)))
            fail("PoleError", "(" + num(z) + ")_" + std::to_string(r) + " is a pole");
        d *= f;
    }
    return 1.0 / d;
}

cplx hyp2f1_series(double a, double b, double c, cplx z, double tol) {
    if (is_nonpos_int(a) || is_nonpos_int(b)) return poly_2f1(a, b, c, z);
    if (std::abs(z) >= 1.0) fail("NonConvergence", "series called outside the unit disc");
    cplx sum = 1.0, comp = 0.0, term = 1.0;
    int small = 0;
    const double settle = std::max({-a, -b, 0.0}) + 1;
    for (int n = 0; n < 200000; ++n) {
        const double den = (c + n) * (n + 1.0);
        if (den == 0) fail("PoleError", "c + n hits zero in the series");
        term *= (a + n) * (b + n) / den * z;
        sum = kahan_add(sum, term, comp);
        if (n > settle && std::abs(term) <= tol * std::abs(sum)) {
            if (++small >= 2) return sum;
        } else {
            small = 0;
        }
    }
    fail("NonConvergence", "hypergeometric series did not converge, |z| = " + num(std::abs(z)));
}

cplx hyp2f1(double a, double b, double c, cplx z, double tol) {
    if (is_nonpos_int(c)) fail("ParameterPole", "c = " + num(c) + " is zero or a negative integer");
    if (!(tol > 0)) fail("PreconditionFailed", "tol must be positive");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail("PreconditionFailed", "non-finite z");
    if (z.imag() == 0 && z.real() >= 1 && !(is_nonpos_int(a) || is_nonpos_int(b)))
        fail("PreconditionFailed", "z = " + num(z.real()) + " lies on the branch cut; use hyp2f1_on_cut");
    cplx v = f21(a, b, c, z, std::max(tol * 1e-2, 1e-17));
    if (z.imag() == 0) v.imag(0.0);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        fail("NonConvergence", "non-finite 2F1 value");
    return v;
}

cplx hyp2f1(const Params& p, cplx z, double tol) { return hyp2f1(p.a, p.b, p.c, z, tol); }

cplx hyp2f1_upper_bank_ode(double a, double b, double c, double x) {
    if (is_nonpos_int(a) || is_nonpos_int(b)) return poly_2f1(a, b, c, x);
    return ode_continue(a, b, c, cplx(x, 0.0));
}

cplx hyp2f1_on_cut(const Params& p, double x, Bank bank, double tol) {
    if (!(x > 1)) fail("PreconditionFailed", "hyp2f1_on_cut needs x > 1, got " + num(x));
    const double a = p.a, b = p.b, c = p.c;
    cplx v;
    if (is_nonpos_int(a) || is_nonpos_int(b)) {
        v = poly_2f1(a, b, c, x);
    } else if (!is_integer(a - b)) {
        // -z = -x - i0 on the upper bank
        const double t = 1.0 / x;
        const double ga = gamma_ratio({c, b - a}, {b, c - a});
        const double gb = gamma_ratio({c, a - b}, {a, c - b});
        const double ftol = std::max(tol * 1e-3, 1e-16);
        if (ga != 0)
            v += ga * std::pow(x, -a) * std::exp(cplx(0, std::numbers::pi * a))
                 * f21(a, a - c + 1, a - b + 1, t, ftol).real();
        if (gb != 0)
            v += gb * std::pow(x, -b) * std::exp(cplx(0, std::numbers::pi * b))
                 * f21(b, b - c + 1, b - a + 1, t, ftol).real();
    } else {
        // Richardson on delta_k = 10^{-3-k}, two elimination levels
        std::array<std::array<cplx, 3>, 6> T{};
        for (int k = 0; k < 6; ++k) {
            const double d = std::pow(10.0, -3 - k);
            T[k][0] = f21(a, b, c, cplx(x, x * d), 1e-16);
            for (int j = 1; j <= 2 && j <= k; ++j) {
                const double f = std::pow(10.0, j);
                T[k][j] = (f * T[k][j - 1] - T[k - 1][j - 1]) / (f - 1);
            }
        }
        v = T[5][2];
        const double err = std::abs(T[5][2] - T[4][2]);
        if (err > std::max(tol, 1e-13) * std::max(1.0, std::abs(v)))
            fail("DegenerateExtrapolation",
                 "extrapolation stagnated at " + num(err) + " for x = " + num(x));
    }
    if (bank == Bank::lower) v = std::conj(v);
    return v;
}

double abs2_on_cut(const Params& p, double x, double tol) {
    if (!(x > 1)) fail("PreconditionFailed", "abs2_on_cut needs x > 1, got " + num(x));
    return abs2_on_cut_xm1(p, x - 1, tol);
}

namespace {

// a - b and c - a - b not integers, a and b not poles
double abs2_generic(double a, double b, double c, double xm1, double tol) {
    const double pi = std::numbers::pi;
    const double eta = c - a - b;
    const double ftol = std::max(tol * 1e-3, 1e-16);
    if (xm1 <= 0.5) {
        // 1 - z = -xm1 - i0 on the upper bank
        const double A = gamma_ratio({c, eta}, {c - a, c - b});
        const double Bc = gamma_ratio({c, -eta}, {a, b});
        cplx v = 0;
        if (A != 0) v += A * f21(a, b, 1 - eta, -xm1, ftol).real();
        if (Bc != 0)
            v += Bc * std::pow(xm1, eta) * std::polar(1.0, -pi * eta) * f21(c - a, c - b, eta + 1, -xm1, ftol).real();
        return std::norm(v);
    }
    const double x = 1 + xm1;
    // imaginary part on the upper bank
    double s1 = 0;
    const double g1 = gamma_ratio({c}, {a, b, eta + 1});
    if (g1 != 0)
        s1 = pi * g1 * std::pow(xm1, eta) * f21(c - a, c - b, eta + 1, -xm1, ftol).real();
    // real part; 1/(Gamma(1/2-a)Gamma(1/2+a)) = cos(pi a)/pi
    double s2 = 0;
    const double ga = gamma_ratio({c, b - a}, {b, c - a});
    const double gb = gamma_ratio({c, a - b}, {a, c - b});
    if (ga != 0)
        s2 += ga * std::cos(pi * a) * std::pow(x, -a) * f21(a, 1 - c + a, 1 - b + a, 1.0 / x, ftol).real();
    if (gb != 0)
        s2 += gb * std::cos(pi * b) * std::pow(x, -b) * f21(b, 1 - c + b, 1 - a + b, 1.0 / x, ftol).real();
    return s1 * s1 + s2 * s2;
}

} // namespace

double abs2_on_cut_xm1(const Params& p, double xm1, double tol) {
    if (!(xm1 > 0)) fail("PreconditionFailed", "abs2_on_cut needs x > 1, got 1 + " + num(xm1));
    const double a = p.a, b = p.b, c = p.c;
    if (is_nonpos_int(a) || is_nonpos_int(b)) return std::norm(poly_2f1(a, b, c, 1 + xm1));
    if (!is_integer(a - b) && !is_integer(c - a - b)) return abs2_generic(a, b, c, xm1, tol);
    // integer a - b or c - a - b: symmetric limit in b, one Richardson step
    const double d = 1e-4;
    auto sym = [&](double h) { return 0.5 * (abs2_generic(a, b + h, c, xm1, tol) + abs2_generic(a, b - h, c, xm1, tol)); };
    return (4 * sym(0.5 * d) - sym(d)) / 3;
}

} // namespace grl
