#include "grl/shifts.hpp"
#include "grl/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace grl {

Shifts derive_shifts(int n1, int n2, int m) {
    Shifts s;
    s.n1 = n1;
    s.n2 = n2;
    s.m = m;
    s.n_min = std::min(n1, n2);
    s.n_max = std::max(n1, n2);
    s.p = std::max(m - n1 - n2, 0);
    s.l = std::max(n1 + n2 - m, 0);
    s.r = s.l + std::max(m, 0) - s.n_min - 1;
    return s;
}

double compute_B(const Params& p, const Shifts& s) {
    const double a = p.a, b = p.b, c = p.c;
    if (is_nonpos_int(c) || is_nonpos_int(c + s.m))
        fail("UndefinedB", "Gamma(c) or Gamma(c+m) sits at a pole");
    return -gamma_ratio({c, c + s.m}, {a, b, c - a + s.m - s.n1, c - b + s.m - s.n2});
}

namespace {

double poch_checked(double z, int r) {
    try {
        return pochhammer(z, r);
    } catch (const Error&) {
        fail("DegenerateParams", "Pochhammer pole (" + std::to_string(z) + ")_" + std::to_string(r));
    }
}

double safe_div(double x, double y) {
    if (y == 0 || !std::isfinite(x / y)) fail("DegenerateParams", "vanishing Pochhammer denominator");
    return x / y;
}

// Coefficients 0..M of 2F1(a,b;c;t).
std::vector<double> series_coeffs(double a, double b, double c, int M) {
    std::vector<double> f(M + 1, 0.0);
    f[0] = 1;
    for (int k = 0; k < M; ++k) {
        const double num = (a + k) * (b + k);
        if (num == 0 || f[k] == 0) break;
        const double den = (c + k) * (k + 1);
        if (std::abs(c + k) <= 1e-12 * std::max(1.0, std::abs(c)))
            fail("DegenerateParams", "series denominator (" + std::to_string(c) + ")_k vanishes");
        f[k + 1] = f[k] * num / den;
    }
    return f;
}

std::vector<double> mul_trunc(const std::vector<double>& x, const std::vector<double>& y, int M) {
    std::vector<double> z(M + 1, 0.0);
    for (int i = 0; i <= M && i < static_cast<int>(x.size()); ++i)
        for (int j = 0; i + j <= M && j < static_cast<int>(y.size()); ++j) z[i + j] += x[i] * y[j];
    return z;
}

double factorial(int n) {
    double f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    double v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// Terminating 4F3(-N, u1, u2, u3; l1, l2, l3; 1).
double f43_terminating(int N, double u1, double u2, double u3, double l1, double l2, double l3) {
    double term = 1, sum = 1;
    for (int i = 0; i < N; ++i) {
        const double den = (l1 + i) * (l2 + i) * (l3 + i) * (i + 1);
        if (den == 0) fail("DegenerateParams", "4F3 lower parameter hits a non-positive integer");
        term *= (-N + i) * (u1 + i) * (u2 + i) * (u3 + i) / den;
        sum += term;
    }
    return sum;
}

} // namespace

RealPoly compute_Pr_taylor(const Params&, const Shifts& s, const ABG& g) {
    if (s.r < 0) return {};
    const double al = g.alpha, be = g.beta, ga = g.gamma;
    const int n1 = s.n1, n2 = s.n2, m = s.m;
    const int M = s.r + s.n_max + std::abs(s.n_min) + s.p + 4;

    const double K1 = safe_div(poch_checked(ga - al, -n2) * poch_checked(ga - be, m - n2),
                               poch_checked(ga - 1, n1 - n2 + 1));
    const double K2 = safe_div(poch_checked(1 - al, -n1) * poch_checked(1 - be, m - n1),
                               poch_checked(1 - ga, n2 - n1 + 1));

    std::vector<double> S1(M + 1, 0.0), S2(M + 1, 0.0);
    if (K1 != 0)
        S1 = mul_trunc(series_coeffs(1 - ga + al, 1 - ga + be, 2 - ga, M),
                       series_coeffs(ga - al - n2, ga - be + m - n2, ga + n1 - n2, M), M);
    if (K2 != 0)
        S2 = mul_trunc(series_coeffs(al, be, ga, M),
                       series_coeffs(1 - al - n1, 1 - be + m - n1, 2 - ga + n2 - n1, M), M);

    std::vector<double> L(M + 1, 0.0), mag(M + 1, 0.0);
    const int sh1 = n1 - s.n_min, sh2 = n2 - s.n_min;
    for (int k = 0; k <= M; ++k) {
        const double x1 = k >= sh1 ? K1 * S1[k - sh1] : 0.0;
        const double x2 = k >= sh2 ? K2 * S2[k - sh2] : 0.0;
        L[k] = x1 + x2;
        mag[k] = std::abs(x1) + std::abs(x2);
    }
    // multiply by (1-t)^p
    std::vector<double> onemt(s.p + 1);
    for (int k = 0; k <= s.p; ++k) onemt[k] = binom(s.p, k) * ((k % 2) ? -1.0 : 1.0);
    const std::vector<double> full = mul_trunc(L, onemt, M);

    double scale = 0;
    for (int k = 0; k <= M; ++k) scale = std::max(scale, std::abs(full[k]));
    for (int k = 0; k <= M; ++k) scale = std::max(scale, 1e-3 * mag[k]);
    // the polynomial identity forces everything beyond degree r to vanish
    for (int k = s.r + 1; k <= M; ++k) {
        if (std::abs(full[k]) > 1e-9 * scale)
            fail("DegenerateParams", "guard coefficient " + std::to_string(k) + " of the P_r identity is " +
                                         std::to_string(full[k]));
    }
    return RealPoly(std::vector<double>(full.begin(), full.begin() + s.r + 1));
}

RealPoly compute_Pr_closed(const Params& p, const Shifts& s) {
    if (s.r < 0) return {};
    const ABG g = default_abg(p);
    const double al = g.alpha, be = g.beta, ga = g.gamma;
    const int n1 = s.n1, n2 = s.n2, m = s.m;

    auto K = [&](int j) {
        double total = 0;
        if (j + n1 >= 0) {
            const double pre = safe_div(poch_checked(1 - al, j) * poch_checked(1 - be, m + j),
                                        poch_checked(1 - ga, n2 + j + 1) * factorial(j + n1));
            if (pre != 0)
                total += pre * f43_terminating(j + n1, al, be, ga - 1 - n2 - j, al - j, be - m - j, ga);
        }
        if (j + n2 >= 0) {
            const double pre = safe_div(poch_checked(ga - al, j) * poch_checked(ga - be, m + j),
                                        poch_checked(ga - 1, n1 + j + 1) * factorial(j + n2));
            if (pre != 0)
                total += pre * f43_terminating(j + n2, 1 - ga + al, 1 - ga + be, 1 - ga - n1 - j,
                                               1 - ga + al - j, 1 - ga + be - m - j, 2 - ga);
        }
        return total;
    };

    std::vector<double> c(s.r + 1, 0.0);
    const double sgn_nmax = (std::abs(s.n_max) % 2) ? -1.0 : 1.0;
    for (int k = 0; k <= s.r; ++k) {
        double inner = 0;
        for (int j = std::max(k - s.p, 0) - s.n_max; j <= k - s.n_max; ++j) {
            const double sj = (std::abs(j) % 2) ? -1.0 : 1.0;
            inner += sj * binom(s.p, k - s.n_max - j) * K(j);
        }
        c[k] = sgn_nmax * ((k % 2) ? -1.0 : 1.0) * inner;
    }
    return RealPoly(std::move(c));
}

namespace {

RealPoly pr_direct(const Params& p, const Shifts& s) {
    try {
        return compute_Pr_taylor(p, s);
    } catch (const Error& e) {
        if (e.kind() != "DegenerateParams") throw;
    }
    return compute_Pr_closed(p, s);
}

// Symmetric limit in one parameter with one Richardson step.
RealPoly pr_limit(const Params& p, const Shifts& s, int which) {
    const double eps = 1e-3;
    auto at = [&](double d) {
        double v[3] = {p.a, p.b, p.c};
        v[which] += d;
        return pr_direct(Params(v[0], v[1], v[2]), s);
    };
    auto sym = [&](double e) {
        RealPoly x = at(e), y = at(-e);
        std::vector<double> c(s.r + 1);
        for (int k = 0; k <= s.r; ++k) c[k] = 0.5 * (x.coeff(k) + y.coeff(k));
        return c;
    };
    const std::vector<double> s1 = sym(eps), s2 = sym(eps / 2);
    std::vector<double> c(s.r + 1);
    for (int k = 0; k <= s.r; ++k) c[k] = (4 * s2[k] - s1[k]) / 3;
    RealPoly out(std::move(c));
    out.trim(1e-13 * out.max_abs());
    return out;
}

} // namespace

RealPoly compute_Pr(const Params& p, const Shifts& s) {
    if (s.r < 0) return {};
    try {
        return pr_direct(p, s);
    } catch (const Error& e) {
        if (e.kind() != "DegenerateParams") throw;
    }
    for (int which : {1, 0, 2}) {
        try {
            return pr_limit(p, s, which);
        } catch (const Error& e) {
            if (e.kind() != "DegenerateParams" && e.kind() != "ParameterPole") throw;
        }
    }
    fail("DegenerateParams", "P_r could not be evaluated at these parameters");
}

double BoundaryDensity::numerator(double x) const {
    const double a = params.a, b = params.b, c = params.c;
    return B * std::pow(x, shifts.l - shifts.n_min - c) * std::pow(x - 1, c - a - b - shifts.l) * P(1.0 / x);
}

BoundaryDensity boundary_density(const Params& p, const Shifts& s) {
    BoundaryDensity d{p, s, compute_B(p, s), {}};
    if (d.B != 0) d.P = compute_Pr(p, s);
    return d;
}

double boundary_im(const BoundaryDensity& d, double x, Bank bank, double tol) {
    if (!(x > 1)) fail("PreconditionFailed", "boundary_im needs x > 1");
    const double num = d.numerator(x);
    if (num == 0) return 0.0;
    const double den = abs2_on_cut(d.params, x, tol);
    if (!(den > 1e-280) || den < 1e-26 * std::abs(num))
        fail("DenominatorZero", "|2F1(a,b;c;x)|^2 vanishes at x = " + std::to_string(x));
    const double v = std::numbers::pi * num / den;
    return bank == Bank::upper ? v : -v;
}

double boundary_im(const Params& p, const Shifts& s, double x, Bank bank, double tol) {
    return boundary_im(boundary_density(p, s), x, bank, tol);
}

namespace {

template <class T>
std::vector<T> ratio_taylor_impl(const T& a, const T& b, const T& c, const Shifts& s, int count) {
    std::vector<T> N(count), D(count), R(count);
    N[0] = 1;
    D[0] = 1;
    for (int k = 0; k + 1 < count; ++k) {
        const T dn = (c + s.m + k) * (k + 1);
        const T dd = (c + k) * (k + 1);
        if (dn == 0 || dd == 0) fail("ParameterPole", "c + m + k vanishes in the Taylor recursion");
        N[k + 1] = N[k] * (a + s.n1 + k) * (b + s.n2 + k) / dn;
        D[k + 1] = D[k] * (a + k) * (b + k) / dd;
    }
    for (int k = 0; k < count; ++k) {
        T acc = N[k];
        for (int j = 1; j <= k; ++j) acc -= D[j] * R[k - j];
        R[k] = acc;
    }
    return R;
}

} // namespace

std::vector<double> ratio_taylor(const Params& p, const Shifts& s, int count) {
    if (count < 1) fail("PreconditionFailed", "count must be >= 1");
    if (is_nonpos_int(p.c + s.m)) fail("ParameterPole", "c + m is zero or a negative integer");
    return ratio_taylor_impl<double>(p.a, p.b, p.c, s, count);
}

std::vector<Rational> ratio_taylor_exact(const Rational& a, const Rational& b, const Rational& c,
                                         const Shifts& s, int count) {
    if (count < 1) fail("PreconditionFailed", "count must be >= 1");
    return ratio_taylor_impl<Rational>(a, b, c, s, count);
}

double ratio_taylor1_closed(const Params& p, const Shifts& s) {
    const double a = p.a, b = p.b, c = p.c;
    return ((a * s.n2 + b * s.n1 + s.n1 * s.n2) * c - a * b * s.m) / (c * (c + s.m));
}

double ratio_at_one(const Params& p, const Shifts& s) {
    const double a = p.a, b = p.b, c = p.c;
    const double num = pochhammer(c, s.m) * pochhammer(c - a - b, s.m - s.n1 - s.n2);
    const double den = pochhammer(c - a, s.m - s.n1) * pochhammer(c - b, s.m - s.n2);
    if (den == 0) fail("PoleError", "R(1) has a vanishing Pochhammer denominator");
    return num / den;
}

cplx ratio(const Params& p, const Shifts& s, cplx z, double tol) {
    const cplx num = hyp2f1(p.a + s.n1, p.b + s.n2, p.c + s.m, z, tol);
    const cplx den = hyp2f1(p, z, tol);
    if (den == cplx(0)) fail("DenominatorZero", "2F1(a,b;c;z) vanishes");
    return num / den;
}

cplx ratio_on_cut(const Params& p, const Shifts& s, double x, Bank bank, double tol) {
    if (is_nonpos_int(p.c + s.m)) fail("ParameterPole", "c + m is zero or a negative integer");
    const Params shifted(p.a + s.n1, p.b + s.n2, p.c + s.m);
    return hyp2f1_on_cut(shifted, x, bank, tol) / hyp2f1_on_cut(p, x, bank, tol);
}

namespace {

using QVec = std::vector<Rational>;

void qtrim(QVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

QVec qadd(const QVec& x, const QVec& y) {
    QVec z(std::max(x.size(), y.size()));
    for (std::size_t k = 0; k < x.size(); ++k) z[k] += x[k];
    for (std::size_t k = 0; k < y.size(); ++k) z[k] += y[k];
    qtrim(z);
    return z;
}

QVec qscale(const Rational& s, const QVec& x) {
    if (s == 0) return {};
    QVec z = x;
    for (auto& v : z) v *= s;
    return z;
}

QVec qmul(const QVec& x, const QVec& y) {
    if (x.empty() || y.empty()) return {};
    QVec z(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
    qtrim(z);
    return z;
}

QVec qderiv(const QVec& x) {
    QVec z;
    for (std::size_t k = 1; k < x.size(); ++k) z.push_back(x[k] * static_cast<int>(k));
    qtrim(z);
    return z;
}

// x = q*y + rem
void qdivmod(QVec x, const QVec& y, QVec& q, QVec& rem) {
    q.assign(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, Rational(0));
    while (!x.empty() && x.size() >= y.size()) {
        const std::size_t sh = x.size() - y.size();
        const Rational f = x.back() / y.back();
        q[sh] = f;
        for (std::size_t k = 0; k < y.size(); ++k) x[sh + k] -= f * y[k];
        x.pop_back();
        qtrim(x);
    }
    qtrim(q);
    rem = x;
}

QVec qmonic(QVec x) {
    if (x.empty()) return x;
    const Rational lead = x.back();
    for (auto& v : x) v /= lead;
    return x;
}

QVec qgcd(QVec x, QVec y) {
    while (!y.empty()) {
        QVec q, rem;
        qdivmod(x, y, q, rem);
        x = std::move(y);
        y = std::move(rem);
    }
    return qmonic(x);
}

QVec qdiv_exact(const QVec& x, const QVec& y) {
    QVec q, rem;
    qdivmod(x, y, q, rem);
    return q;
}

struct RatFn {
    QVec n, d{Rational(1)};
};

RatFn normalize(RatFn f) {
    if (f.n.empty()) return {{}, {Rational(1)}};
    const QVec g = qgcd(f.n, f.d);
    if (g.size() > 1) {
        f.n = qdiv_exact(f.n, g);
        f.d = qdiv_exact(f.d, g);
    }
    const Rational lead = f.d.back();
    f.n = qscale(1 / lead, f.n);
    f.d = qscale(1 / lead, f.d);
    return f;
}

RatFn rf(QVec n, QVec d = {Rational(1)}) { return normalize({std::move(n), std::move(d)}); }
RatFn rconst(const Rational& v) { return rf(v == 0 ? QVec{} : QVec{v}); }

RatFn operator+(const RatFn& x, const RatFn& y) {
    return rf(qadd(qmul(x.n, y.d), qmul(y.n, x.d)), qmul(x.d, y.d));
}
RatFn operator*(const RatFn& x, const RatFn& y) { return rf(qmul(x.n, y.n), qmul(x.d, y.d)); }

// theta = z d/dz
RatFn theta(const RatFn& f) {
    const QVec num = qadd(qmul(qderiv(f.n), f.d), qscale(-1, qmul(f.n, qderiv(f.d))));
    return rf(qmul({Rational(0), Rational(1)}, num), qmul(f.d, f.d));
}

// T = U F + V theta F with F = 2F1(a,b;c;z) at the base parameters.
struct State {
    RatFn U, V;
};

class LadderBuilder {
public:
    LadderBuilder(const Rational& a, const Rational& b, const Rational& c) : a_(a), b_(b), c_(c) {
        // theta^2 F = [ab z F + ((a+b) z + 1 - c) theta F] / (1 - z)
        const QVec onemz{Rational(1), Rational(-1)};
        t2F_ = rf({Rational(0), a * b}, onemz);
        t2T_ = rf({1 - c, a + b}, onemz);
    }

    State apply_theta(const State& s) const {
        return {theta(s.U) + s.V * t2F_, s.U + theta(s.V) + s.V * t2T_};
    }

    // alpha T + beta theta T
    State combine(const State& s, const RatFn& alpha, const RatFn& beta) const {
        const State th = apply_theta(s);
        return {alpha * s.U + beta * th.U, alpha * s.V + beta * th.V};
    }

    static void need(const Rational& v, const char* what) {
        if (v == 0) fail("LadderDegeneracy", std::string("contiguous relation coefficient vanishes: ") + what);
    }

    State raise_a(const State& s, const Rational& ap) const {
        need(ap, "a");
        return combine(s, rconst(1), rconst(1 / ap));
    }
    State raise_b(const State& s, const Rational& bp) const {
        need(bp, "b");
        return combine(s, rconst(1), rconst(1 / bp));
    }
    State lower_c(const State& s, const Rational& cp) const {
        need(cp - 1, "c - 1");
        return combine(s, rconst(1), rconst(1 / (cp - 1)));
    }
    State lower_a(const State& s, const Rational& ap, const Rational& bp, const Rational& cp) const {
        need(cp - ap, "c - a");
        return combine(s, rf({Rational(1), -bp / (cp - ap)}),
                       rf({1 / (cp - ap), -1 / (cp - ap)}));
    }
    State lower_b(const State& s, const Rational& ap, const Rational& bp, const Rational& cp) const {
        need(cp - bp, "c - b");
        return combine(s, rf({Rational(1), -ap / (cp - bp)}), rf({1 / (cp - bp), -1 / (cp - bp)}));
    }
    State raise_c(const State& s, const Rational& ap, const Rational& bp, const Rational& cp) const {
        need(cp - ap, "c - a");
        need(cp - bp, "c - b");
        const Rational k = cp / ((cp - ap) * (cp - bp));
        return combine(s, rconst(k * (cp - ap - bp)), rf({k, -k}, {Rational(0), Rational(1)}));
    }

    State walk(const Shifts& sh) const {
        State s{rconst(1), rconst(0)};
        Rational ap = a_, bp = b_, cp = c_;
        for (int k = 0; k < sh.m; ++k) s = raise_c(s, ap, bp, cp), cp += 1;
        for (int k = 0; k > sh.m; --k) s = lower_c(s, cp), cp -= 1;
        for (int k = 0; k < sh.n1; ++k) s = raise_a(s, ap), ap += 1;
        for (int k = 0; k > sh.n1; --k) s = lower_a(s, ap, bp, cp), ap -= 1;
        for (int k = 0; k < sh.n2; ++k) s = raise_b(s, bp), bp += 1;
        for (int k = 0; k > sh.n2; --k) s = lower_b(s, ap, bp, cp), bp -= 1;
        return s;
    }

private:
    Rational a_, b_, c_;
    RatFn t2F_, t2T_;
};

RationalPoly to_rpoly(const QVec& v) { return {v}; }

QVec lcm(const QVec& x, const QVec& y) { return qmonic(qdiv_exact(qmul(x, y), qgcd(x, y))); }

} // namespace

LadderExact contiguous_ladder_exact(const Rational& a, const Rational& b, const Rational& c, const Shifts& s) {
    if (c <= 0 && denominator(c) == 1) fail("ParameterPole", "c is zero or a negative integer");
    const LadderBuilder lb(a, b, c);
    const State T = lb.walk(s);

    // basis function 2F1(a,b+1;c+1) in the same coordinates
    State G;
    try {
        G = lb.raise_b(lb.raise_c(State{rconst(1), rconst(0)}, a, b, c), b);
    } catch (const Error&) {
        G = lb.raise_c(lb.raise_b(State{rconst(1), rconst(0)}, b), a, b + 1, c);
    }
    if (G.V.n.empty()) fail("LadderDegeneracy", "2F1(a,b+1;c+1) and 2F1(a,b;c) are rationally dependent");

    // T = (V/Gv) G + (U - V Gu/Gv) F
    const RatFn Gv_inv = rf(G.V.d, G.V.n);
    const RatFn qf = T.V * Gv_inv;
    const RatFn rfn = T.U + rconst(-1) * (T.V * Gv_inv * G.U);

    const QVec pden = lcm(qf.d, rfn.d);
    QVec q = qmul(qf.n, qdiv_exact(pden, qf.d));
    QVec r = qmul(rfn.n, qdiv_exact(pden, rfn.d));
    QVec pp = pden;
    // clear a common factor shared by all three
    QVec g = qgcd(pp, qgcd(q.empty() ? pp : q, r.empty() ? pp : r));
    if (g.size() > 1) {
        pp = qdiv_exact(pp, g);
        q = qdiv_exact(q, g);
        r = qdiv_exact(r, g);
    }
    const Rational lead = pp.back();
    return {to_rpoly(qscale(1 / lead, pp)), to_rpoly(qscale(1 / lead, q)), to_rpoly(qscale(1 / lead, r))};
}

Ladder contiguous_ladder(const Params& p, const Shifts& s) {
    const LadderExact ex = contiguous_ladder_exact(exact_rational(p.a), exact_rational(p.b), exact_rational(p.c), s);
    auto conv = [](const RationalPoly& rp) {
        std::vector<double> c;
        for (const auto& v : rp.coeffs) c.push_back(to_double(v));
        return RealPoly(std::move(c));
    };
    return {conv(ex.p), conv(ex.q), conv(ex.r)};
}

} // namespace grl
