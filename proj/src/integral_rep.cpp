#include "grl/integral_rep.hpp"
#include "grl/error.hpp"
#include "grl/examples.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace grl {

namespace {

constexpr double kLargeLogX = 13.815510557964274; // log 1e6

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

bool digamma_ok(double x) { return !is_nonpos_int(x); }

// two leading terms of 2F1(a,b;c;x + i0) at infinity, divided by x^-a, a <= b
std::optional<double> log_abs2_asymptotic(double a, double b, double c, double lx) {
    if (is_nonpos_int(a) || is_nonpos_int(b)) return std::nullopt;
    const double pi = std::numbers::pi;
    const double ix = std::exp(-lx);
    const double m = b - a;
    cplx S;
    if (!is_integer(m)) {
        const double A1 = gamma_ratio({c, b - a}, {b, c - a});
        const double A2 = gamma_ratio({c, a - b}, {a, c - b});
        const cplx T1 = A1 * std::polar(1.0, pi * a) * (1 + a * (a - c + 1) / (a - b + 1) * ix);
        const cplx T2 = A2 * std::polar(1.0, pi * b) * (1 + b * (b - c + 1) / (b - a + 1) * ix);
        if (A1 == 0) {
            if (A2 == 0) return std::nullopt;
            return -2 * b * lx + std::log(std::norm(T2));
        }
        S = T1 + std::exp(-m * lx) * T2;
    } else {
        const int mi = static_cast<int>(std::round(m));
        if (is_nonpos_int(c - a)) return std::nullopt;
        if (mi == 0) {
            if (!digamma_ok(a + 1) || !digamma_ok(c - a)) return std::nullopt;
            using boost::math::digamma;
            const double K = gamma_ratio({c}, {a, c - a});
            const cplx log_mz(lx, -pi);
            const cplx t0 = log_mz + 2 * digamma(1.0) - digamma(a) - digamma(c - a);
            // (1-c+a) psi(c-a-1) -> 1 when c - a = 1
            const cplx t1 = is_integer(c - a - 1)
                                ? cplx(-a * ix)
                                : a * (1 - c + a) * ix * (log_mz + 2 * digamma(2.0) - digamma(a + 1) - digamma(c - a - 1));
            S = K * (t0 + t1);
        } else {
            const double K0 = gamma_ratio({c, static_cast<double>(mi)}, {a + mi, c - a});
            double K1 = 0;
            if (mi >= 2 && !is_nonpos_int(c - a - 1))
                K1 = a * gamma_ratio({c, static_cast<double>(mi - 1)}, {a + mi, c - a - 1});
            S = K0 + K1 * ix;
        }
    }
    const double n2 = std::norm(S);
    if (!(n2 > 0) || !std::isfinite(n2)) return std::nullopt;
    return -2 * a * lx + std::log(n2);
}

double eta_exponent_at_one(const Params& p) {
    const double a = p.a, b = p.b, c = p.c, eta = c - a - b;
    if (is_nonpos_int(a) || is_nonpos_int(b)) return 0;
    if (is_nonpos_int(c - a) || is_nonpos_int(c - b)) return eta;
    return std::min(eta, 0.0);
}

} // namespace

double log_abs2_on_cut(const Params& p, double lx) {
    if (!(lx > 0)) fail("PreconditionFailed", "need x > 1");
    if (lx < 0.5) return std::log(abs2_on_cut_xm1(p, std::expm1(lx)));
    if (lx > kLargeLogX) {
        const double a = std::min(p.a, p.b), b = std::max(p.a, p.b);
        if (auto v = log_abs2_asymptotic(a, b, p.c, lx)) return *v;
    }
    const double x = std::exp(lx);
    const double v = std::isfinite(x) ? abs2_on_cut(p, x) : 0.0;
    if (!(v > 0) || !std::isfinite(v))
        fail("DegenerateParams", "|2F1|^2 out of range at log x = " + num(lx) + " and no expansion at infinity applies");
    return std::log(v);
}

Representation build_representation(const Params& p, const Shifts& s, int order) {
    Representation rep;
    rep.params = p;
    rep.shifts = s;
    const RunckelReport rk = runckel_check(p);
    if (!rk.satisfied)
        fail("PreconditionFailed", "Runckel: 2F1(a,b;c;z) may vanish off the cut (" + rk.details + ")");
    rep.runckel = rk.which;
    rep.at_one = classify_at_one(p, s);
    if (!rep.at_one.integrable) fail("PreconditionFailed", "nu > -1 fails: nu = " + num(rep.at_one.nu));
    rep.at_infinity = classify_at_infinity(p, s);
    if (rep.at_infinity.unclassified)
        fail("PreconditionFailed", "asymptotics at infinity not classified for these parameters");
    rep.N = rep.at_infinity.N;
    rep.Q = rep.at_infinity.Q;
    if (order >= 0) {
        if (order < rep.N)
            fail("PreconditionFailed", "order " + std::to_string(order) + " is below the minimal N = " + std::to_string(rep.N));
        rep.N = order;
    }
    if (rep.N > 0) {
        rep.taylor_head = ratio_taylor(p, s, rep.N);
        for (int k = 0; k < rep.N; ++k) rep.taylor_head[k] -= rep.Q.coeff(k);
    }
    rep.density = boundary_density(p, s);
    rep.t_exponent = p.a + p.b + s.n_min + rep.N - 1;
    rep.omt_exponent = p.c - p.a - p.b - s.l;
    rep.t_exponent_eff = rep.t_exponent + 2 * rep.at_infinity.gamma;
    rep.omt_exponent_eff = rep.omt_exponent - 2 * eta_exponent_at_one(p);
    return rep;
}

namespace {

double log_abs2_at(const Params& p, const UnitPoint& pt) {
    if (pt.t < 0.6) return log_abs2_on_cut(p, -pt.log_t);
    // x - 1 = (1-t)/t; below 1e-300 the value at 1 + 1e-300 stands in
    const double xm1 = std::max(std::exp(pt.log_omt - pt.log_t), 1e-300);
    return std::log(abs2_on_cut_xm1(p, xm1));
}

// exp(log_jac) t^alpha (1-t)^beta / |2F1(a,b;c;1/t)|^2
double weight(const Params& p, double alpha, double beta, const UnitPoint& pt) {
    const double l = alpha * pt.log_t + beta * pt.log_omt + pt.log_jac - log_abs2_at(p, pt);
    return std::exp(l);
}

bool density_vanishes(const Representation& rep) { return rep.density.B == 0 || rep.density.P.is_zero(); }

QuadratureResult integrate_density(const Representation& rep, double da, double db, cplx z, const QuadOptions& opt) {
    if (density_vanishes(rep)) return {};
    const double alpha = rep.t_exponent + da, beta = rep.omt_exponent + db;
    auto f = [&](const UnitPoint& pt) -> cplx {
        const cplx den = 1.0 - z * pt.t;
        if (std::abs(den) < 1e-12) fail("NearCutPole", "|1 - z t| < 1e-12 at t = " + num(pt.t));
        return weight(rep.params, alpha, beta, pt) * rep.density.P(pt.t) / den;
    };
    return integrate_unit(f, rep.t_exponent_eff + da, rep.omt_exponent_eff + db, opt);
}

} // namespace

double representation_density(const Representation& rep, double t) {
    if (!(t > 0 && t < 1)) fail("PreconditionFailed", "t must lie in (0, 1)");
    if (density_vanishes(rep)) return 0;
    const UnitPoint pt{t, 1 - t, std::log(t), std::log1p(-t), 0.0};
    return rep.density.B * rep.density.P(t) * weight(rep.params, rep.t_exponent, rep.omt_exponent, pt);
}

QuadratureResult eval_representation(const Representation& rep, cplx z, double tol, int max_nodes) {
    if (!(tol > 0)) fail("PreconditionFailed", "tol must be positive");
    if (z.imag() == 0 && z.real() >= 1) fail("PreconditionFailed", "z lies on the cut [1, inf)");
    QuadOptions opt;
    opt.tol = tol;
    opt.max_nodes = max_nodes;
    const QuadratureResult q = integrate_density(rep, 0, 0, z, opt);
    cplx poly = rep.Q(z);
    cplx zk = 1;
    for (double c : rep.taylor_head) {
        poly += c * zk;
        zk *= z;
    }
    // zk == z^N here
    const cplx scale = zk * rep.density.B;
    return {poly + scale * q.value, std::abs(scale) * q.abs_error_estimate, q.nodes_used};
}

const char* to_string(Moment m) {
    switch (m) {
    case Moment::z0: return "z0";
    case Moment::z1: return "z1";
    case Moment::z01: return "z01";
    }
    return "z0";
}

MomentCheck moment_identity_check(const Representation& rep, Moment which, double tol) {
    const Params& p = rep.params;
    const Shifts& s = rep.shifts;
    const int N = rep.N;
    if (which != Moment::z0 && !(rep.omt_exponent > 0))
        fail("PreconditionFailed", "c-a-b-l > 0 fails: c-a-b-l = " + num(rep.omt_exponent));
    const double B = rep.density.B;
    if (density_vanishes(rep)) return {};
    const std::vector<double> R = ratio_taylor(p, s, N + 1);
    const double QN = rep.Q.coeff(N);
    QuadOptions opt;
    opt.tol = tol;
    MomentCheck out;
    double rhs_num = 0;
    QuadratureResult q;
    if (which == Moment::z0) {
        q = integrate_density(rep, 0, 0, 0.0, opt);
        rhs_num = R[N] - QN;
    } else {
        const double R1 = ratio_at_one(p, s);
        double head = 0;
        for (double h : rep.taylor_head) head += h;
        if (which == Moment::z1) {
            q = integrate_density(rep, 0, -1, 0.0, opt);
            rhs_num = R1 - rep.Q(1.0) - head;
        } else {
            q = integrate_density(rep, 1, -1, 0.0, opt);
            rhs_num = R1 - rep.Q(1.0) + QN - head - R[N];
        }
    }
    out.lhs = q.value.real();
    out.lhs_error = q.abs_error_estimate;
    out.rhs = rhs_num / B;
    return out;
}

IdentityCheck example12_identity(double z, double tol) {
    if (!(z > -1)) fail("PreconditionFailed", "the identity needs z > -1");
    const double pi = std::numbers::pi;
    // x - 1 = exp(pi tan theta) turns the integral into (1/pi) int dtheta / (1 + (1+z) e^{-u})
    auto f = [&](double th) -> cplx {
        const double u = pi * std::tan(th);
        return 1.0 / (1.0 + (1.0 + z) * std::exp(-u));
    };
    QuadOptions opt;
    opt.tol = tol;
    const QuadratureResult q = integrate_adaptive(f, -0.5 * pi, 0.5 * pi, opt);
    IdentityCheck out;
    out.z = z;
    out.lhs = z == 0 ? 1.0 : z / std::log1p(z);
    out.rhs = 1 + z * q.value.real() / pi;
    out.residual = std::abs(out.lhs - out.rhs);
    out.error_estimate = std::abs(z) * q.abs_error_estimate / pi;
    return out;
}

std::vector<cplx> default_z_grid() {
    return {cplx(-2, 0), cplx(-0.5, 0), cplx(0.3, 0), cplx(0.5, 0.2), cplx(-1, 1.5), cplx(2, -0.5)};
}

ExampleReport verify_example(int idx, const Params& p, const std::vector<cplx>& z_grid, double tol) {
    const ExampleSpec& spec = example_spec(idx);
    const Shifts s = derive_shifts(spec.n1, spec.n2, spec.m);
    Representation rep;
    try {
        rep = build_representation(p, s);
    } catch (const Error& e) {
        if (e.kind() == "PreconditionFailed") fail("InapplicableParameters", e.what());
        throw;
    }
    ExampleReport r;
    r.index = idx;
    r.params = p;
    r.shifts = s;
    r.N = rep.N;
    r.Q = rep.Q;
    r.runckel = rep.runckel;
    for (cplx z : z_grid) {
        const QuadratureResult q = eval_representation(rep, z, tol);
        const cplx d = ratio(p, s, z);
        ExampleRow row{z, q.value, d, std::abs(q.value - d) / std::abs(d), q.abs_error_estimate, q.nodes_used};
        r.max_rel_error = std::max(r.max_rel_error, row.rel_error);
        r.rows.push_back(row);
    }
    const RealPoly bp = rep.density.BP();
    double scale = 0, dev = 0;
    for (int i = 1; i < 10; ++i) scale = std::max(scale, std::abs(example_BP(idx, p, 0.1 * i)));
    for (int i = 1; i < 10; ++i) dev = std::max(dev, std::abs(bp(0.1 * i) - example_BP(idx, p, 0.1 * i)));
    r.bp_formula_deviation = scale > 0 ? dev / scale : dev;
    auto tail = [&](double T) {
        return std::abs(ratio(p, s, cplx(-T, 0)) - rep.Q(cplx(-T, 0))) / std::pow(T, rep.N);
    };
    r.q_tail_ratio = tail(1e6) / tail(1e3);
    if (idx == 12) r.identity = example12_identity(1.0);
    return r;
}

} // namespace grl
