#include "grl/nevanlinna.hpp"
#include "grl/error.hpp"
#include "grl/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace grl {

const char* to_string(RunckelCondition c) {
    switch (c) {
    case RunckelCondition::I: return "I";
    case RunckelCondition::II: return "II";
    case RunckelCondition::III: return "III";
    case RunckelCondition::IV: return "IV";
    case RunckelCondition::V: return "V";
    case RunckelCondition::none: return "none";
    }
    return "none";
}

const char* to_string(BPSign s) {
    switch (s) {
    case BPSign::nonneg: return "nonneg";
    case BPSign::nonpos: return "nonpos";
    case BPSign::sign_changing: return "sign_changing";
    case BPSign::identically_zero: return "identically_zero";
    }
    return "identically_zero";
}

RunckelReport runckel_check(const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    const double lo = std::min(a, b), hi = std::max(a, b);
    RunckelReport r;
    auto hit = [&](RunckelCondition w, const std::string& d) {
        r.satisfied = true;
        r.which = w;
        r.details = d;
        return r;
    };
    if (-1 < lo && lo <= c && c <= hi && hi <= 0) return hit(RunckelCondition::I, "-1 < min(a,b) <= c <= max(a,b) <= 0");
    if (-1 < lo && lo <= 0 && 0 <= hi && hi <= c) return hit(RunckelCondition::II, "-1 < min(a,b) <= 0 <= max(a,b) <= c");
    if (-1 < c && c <= lo && lo <= 0 && 0 <= hi && hi < c + 1)
        return hit(RunckelCondition::III, "-1 < c <= min(a,b) <= 0 <= max(a,b) < c+1");
    if (0 <= lo && lo <= c && 0 <= hi && hi < c + 1) return hit(RunckelCondition::IV, "0 <= min(a,b) <= c, 0 <= max(a,b) < c+1");

    const std::array<double, 5> neg{a, b, c, c - a, c - b};
    const bool all_neg = std::all_of(neg.begin(), neg.end(), [](double x) { return x < 0 && !is_integer(x); });
    if (all_neg) {
        std::array<double, 4> xi{a, b, c - a, c - b};
        std::sort(xi.begin(), xi.end());
        const double f1 = std::floor(xi[0]), f2 = std::floor(xi[1]), f3 = std::floor(xi[2]), f4 = std::floor(xi[3]);
        std::ostringstream os;
        os << "sorted xi = (" << xi[0] << ", " << xi[1] << ", " << xi[2] << ", " << xi[3] << "), floors (" << f1 << ", "
           << f2 << ", " << f3 << ", " << f4 << ")";
        if (f1 + 1 == f4 && f2 == f3) return hit(RunckelCondition::V, os.str());
        r.details = "none of I-V holds; " + os.str();
        return r;
    }
    r.details = "none of I-V holds";
    return r;
}

BPSign bp_sign_on_unit_interval(const BoundaryDensity& d) {
    if (d.shifts.r < 0 || d.B == 0 || d.P.is_zero()) return BPSign::identically_zero;
    RealPoly P = d.P;
    P.trim(1e-14 * P.max_abs());
    if (P.is_zero()) return BPSign::identically_zero;
    std::vector<double> knots{0.0};
    for (double t : real_roots_in(P, 0.0, 1.0)) knots.push_back(t);
    knots.push_back(1.0);
    bool pos = false, neg = false;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double v = d.B * P(0.5 * (knots[i] + knots[i + 1]));
        if (v > 0) pos = true;
        if (v < 0) neg = true;
    }
    if (pos && neg) return BPSign::sign_changing;
    if (neg) return BPSign::nonpos;
    return BPSign::nonneg;
}

BPSign bp_sign_on_unit_interval(const Params& p, const Shifts& s) {
    return bp_sign_on_unit_interval(boundary_density(p, s));
}

namespace {

bool in_N0(double x) { return is_nonpos_int(-x); }
bool in_N(double x) { return in_N0(x) && std::round(x) >= 1; }

int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int gsign(double x) { return gamma_sign(x).sign; }

int count_neg(const std::vector<int>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](int e) { return e < 0; }));
}

} // namespace

NevanlinnaClass classify_gauss_ratio(const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    NevanlinnaClass out;
    const bool rational = in_N0(-a) || in_N0(-b - 1) || in_N0(a - c - 1) || in_N0(b - c);
    if (!rational) {
        // every Gamma argument and the linear factor are positive from J on
        const double worst = std::min({a, c - b, b + 1, c - a + 1, c / 2, b, c - a, (c - 1) / 2});
        const int J = std::max(1, static_cast<int>(std::ceil(-worst)) + 1);
        std::vector<int> theta, eta;
        for (int j = 0; j <= J; ++j)
            theta.push_back(sgn(c + 2 * j) * gsign(a + j) * gsign(c - b + j) * gsign(b + j + 1) * gsign(c - a + j + 1));
        for (int j = 1; j <= J; ++j)
            eta.push_back(sgn(c + 2 * j - 1) * gsign(a + j) * gsign(c - b + j) * gsign(b + j) * gsign(c - a + j));
        out.epsilon = theta[0];
        out.lambda = count_neg(theta);
        out.kappa = count_neg(eta);
        return out;
    }

    out.is_rational = true;
    const double inf = HUGE_VAL;
    double s1 = inf, s2 = inf;
    for (double x : {-a, b - c})
        if (in_N0(x)) s1 = std::min(s1, std::round(x));
    for (double x : {-b, a - c})
        if (in_N(x)) s2 = std::min(s2, std::round(x));
    const double s = std::min(2 * s1, 2 * s2 - 1);
    out.K = static_cast<int>(std::floor((s + 1) / 2));
    out.Lambda_deg = static_cast<int>(std::floor((s + 2) / 2));

    if (s == 2 * s1) {
        const int S1 = static_cast<int>(s1);
        if (S1 == 0) {
            out.epsilon = 1;
            return out;
        }
        std::vector<int> eps(2 * S1 + 1, 0);
        for (int j = 0; j < S1; ++j)
            for (int d = 0; d <= 1; ++d) {
                const double v = pochhammer(a + j + d, S1 - j - d) * pochhammer(c - b + j + d, S1 - j - d) *
                                 pochhammer(b + j + 1, S1 - j) * pochhammer(c - a + j + 1, S1 - j) /
                                 ((c + 2 * j + d) * (c + 2 * S1));
                eps[2 * j + 1 + d] = sgn(v);
            }
        out.epsilon = eps[1];
        for (int k = 1; k <= 2 * S1; ++k)
            if (eps[k] < 0) ++(k % 2 ? out.lambda : out.kappa);
        return out;
    }

    const int S2 = static_cast<int>(s2);
    std::vector<int> eps(2 * S2, 0);
    for (int j = 0; j < S2; ++j)
        for (int d = 0; d <= 1; ++d) {
            if (j + d == 0) continue;
            const double v = pochhammer(a + j, S2 - j) * pochhammer(c - b + j, S2 - j) * pochhammer(b + j + d, S2 - j - d) *
                             pochhammer(c - a + j + d, S2 - j - d) / ((c + 2 * j - 1 + d) * (c + 2 * S2 - 1));
            eps[2 * j + d] = sgn(v);
        }
    out.epsilon = eps[1];
    if (S2 == 1) {
        out.lambda = (1 - out.epsilon) / 2;
        out.kappa = 0;
        return out;
    }
    for (int k = 1; k <= 2 * S2 - 1; ++k)
        if (eps[k] < 0) ++(k % 2 ? out.lambda : out.kappa);
    return out;
}

NevanlinnaClass classify_terminating_cfrac(const CFrac& f) {
    if (!f.terminating || f.head.empty())
        fail("MalformedFraction", "expected a terminating fraction with at least alpha_0");
    const int k = static_cast<int>(f.head.size()) - 1;
    for (int j = 0; j <= k; ++j)
        if (f.head[j] == 0 || !std::isfinite(f.head[j]))
            fail("MalformedFraction", "coefficient alpha_" + std::to_string(j) + " must be finite and nonzero");
    auto alpha = [&](int j) { return j <= k ? f.head[j] : 0.0; };
    // eps[j] = sign prod_{l=j}^k alpha_l
    std::vector<int> eps(k + 2, 1);
    for (int j = k; j >= 0; --j) eps[j] = eps[j + 1] * sgn(f.head[j]);

    NevanlinnaClass out;
    out.is_rational = true;
    out.K = (k + 1) / 2;
    out.Lambda_deg = (k + 2) / 2;
    out.epsilon = eps[0];
    for (int j = 1; j <= 2 * out.Lambda_deg - 3; j += 2)
        if (eps[j] < 0) ++out.lambda;
    if (alpha(2 * out.Lambda_deg - 1) < 0) ++out.lambda;
    for (int j = 2; j <= 2 * out.K - 2; j += 2)
        if (eps[j] < 0) ++out.kappa;
    if (alpha(2 * out.K) < 0) ++out.kappa;
    return out;
}

NevanlinnaClass classify_nonterminating_cfrac(const CFrac& f, int m_bound, int probe_horizon) {
    if (f.terminating) fail("MalformedFraction", "fraction terminates; use the terminating classifier");
    if (f.head.empty()) fail("MalformedFraction", "fraction has no coefficients");
    const bool certified = f.positive_from >= 0;
    int horizon = certified ? f.positive_from : std::max(probe_horizon, 2 * m_bound + 2);
    if (f.last() >= 0 && f.last() < horizon) {
        if (certified) fail("TailUndecided", "certificate index lies beyond the available coefficients");
        if (f.last() < 2 * m_bound + 2)
            fail("TailUndecided", "only " + std::to_string(f.last()) + " coefficients available; probe exhausted");
        horizon = f.last();
    }
    int last_neg = 0;
    for (int j = 1; j <= horizon; ++j) {
        const double a = f.alpha(j);
        if (a == 0) fail("MalformedFraction", "alpha_" + std::to_string(j) + " vanishes inside a non-terminating fraction");
        if (a < 0) last_neg = j;
    }
    NevanlinnaClass out;
    out.heuristic = !certified;
    const int m = (last_neg + 1) / 2;
    if (!certified && m > m_bound) {
        out.status = NevanlinnaStatus::not_in_s_union;
        return out;
    }
    std::vector<int> eps(2 * m + 2, 1);
    for (int j = 2 * m; j >= 0; --j) eps[j] = eps[j + 1] * sgn(f.alpha(j));
    out.epsilon = eps[0];
    for (int j = 1; j <= 2 * m - 1; j += 2)
        if (eps[j] < 0) ++out.lambda;
    for (int j = 2; j <= 2 * m; j += 2)
        if (eps[j] < 0) ++out.kappa;
    return out;
}

int pick_negative_count(const std::vector<cplx>& z, const std::vector<cplx>& f, double tol_eig) {
    const int n = static_cast<int>(z.size());
    if (n == 0 || f.size() != z.size()) fail("DegeneratePoints", "points and values must be non-empty and of equal length");
    for (int i = 0; i < n; ++i) {
        if (!(z[i].imag() > 0)) fail("DegeneratePoints", "points must lie in the open upper half-plane");
        if (!std::isfinite(f[i].real()) || !std::isfinite(f[i].imag())) fail("DegeneratePoints", "function value is not finite");
        for (int j = 0; j < i; ++j)
            if (std::abs(z[i] - z[j]) < 1e-14 * std::max(1.0, std::abs(z[i]))) fail("DegeneratePoints", "points are not distinct");
    }
    Eigen::MatrixXcd H(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) H(k, j) = (f[k] - std::conj(f[j])) / (z[k] - std::conj(z[j]));
    H = 0.5 * (H + H.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double norm = ev.cwiseAbs().maxCoeff();
    int neg = 0;
    for (int i = 0; i < n; ++i)
        if (ev[i] < -tol_eig * norm) ++neg;
    return neg;
}

std::vector<std::vector<cplx>> pick_point_sets(int n_points, int draws, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logmod(std::log(0.1), std::log(10.0));
    std::uniform_real_distribution<double> arg(0.1, std::numbers::pi - 0.1);
    std::vector<std::vector<cplx>> sets(draws);
    for (auto& s : sets)
        for (int i = 0; i < n_points; ++i) s.push_back(std::polar(std::exp(logmod(rng)), arg(rng)));
    return sets;
}

PickOracleResult pick_oracle(const std::function<cplx(cplx)>& f, int n_points, int draws, std::uint64_t seed,
                             double tol_eig) {
    PickOracleResult r;
    r.seed = seed;
    for (const auto& pts : pick_point_sets(n_points, draws, seed)) {
        std::vector<cplx> vals;
        vals.reserve(pts.size());
        for (cplx z : pts) vals.push_back(f(z));
        r.max_negative = std::max(r.max_negative, pick_negative_count(pts, vals, tol_eig));
        ++r.draws;
    }
    return r;
}

} // namespace grl
