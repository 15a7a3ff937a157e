#include "grl/quadrature.hpp"
#include "grl/error.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <tuple>

namespace grl {

namespace {

GaussRule golub_welsch(int n, double alpha, double beta) {
    // (1-x)^A (1+x)^B on [-1, 1], t = (1+x)/2
    const double A = beta, B = alpha, s = A + B;
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) {
        const double d = 2.0 * k + s;
        diag[k] = k == 0 ? (B - A) / (s + 2) : (B * B - A * A) / (d * (d + 2));
    }
    for (int k = 1; k < n; ++k) {
        const double d = 2.0 * k + s;
        const double v = k == 1 ? 4 * (1 + A) * (1 + B) / ((2 + s) * (2 + s) * (3 + s))
                                : 4.0 * k * (k + A) * (k + B) * (k + s) / (d * d * (d + 1) * (d - 1));
        sub[k - 1] = std::sqrt(v);
    }
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double mu0 = boost::math::beta(alpha + 1, beta + 1);
    if (n == 1) {
        r.nodes[0] = 0.5 * (1 + diag[0]);
        r.weights[0] = mu0;
        return r;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = 0.5 * (1 + es.eigenvalues()[i]);
        const double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

struct Panel {
    int kind;
    double u0, u1;
    cplx value;
    double err;
};

struct ByErr {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

// f_mapped(kind, u) is the integrand times the Jacobian in the panel variable u
template <class F>
QuadratureResult adaptive(F&& f_mapped, std::vector<Panel> init, const QuadOptions& opt, int nodes_so_far) {
    const GaussRule& g16 = gauss_legendre01(16);
    const GaussRule& g32 = gauss_legendre01(32);
    int evals = nodes_so_far;
    auto rule = [&](int kind, double u0, double u1, const GaussRule& g) {
        cplx s = 0;
        const double h = u1 - u0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f_mapped(kind, u0 + h * g.nodes[i]);
        evals += static_cast<int>(g.nodes.size());
        return h * s;
    };
    auto eval = [&](Panel p) {
        const cplx lo = rule(p.kind, p.u0, p.u1, g16);
        p.value = rule(p.kind, p.u0, p.u1, g32);
        p.err = std::abs(p.value - lo);
        if (!std::isfinite(p.err)) fail("QuadratureStall", "integrand is not finite on a panel");
        return p;
    };

    std::priority_queue<Panel, std::vector<Panel>, ByErr> queue;
    std::vector<Panel> done;
    for (auto& p : init) queue.push(eval(p));
    auto totals = [&]() {
        std::vector<Panel> all = done;
        auto copy = queue;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) {
            return std::tie(x.kind, x.u0) < std::tie(y.kind, y.u0);
        });
        cplx v = 0;
        double e = 0;
        for (const auto& p : all) {
            v += p.value;
            e += p.err;
        }
        return std::pair{v, e};
    };

    int panels = static_cast<int>(init.size());
    for (int iter = 0;; ++iter) {
        auto [v, e] = totals();
        if (e <= opt.tol * std::abs(v) || e == 0) return {v, e, evals};
        if (panels >= opt.max_panels) {
            fail("QuadratureStall", "panel budget exhausted with error estimate " + std::to_string(e) + " on value " +
                                        std::to_string(std::abs(v)));
        }
        // split the worst few before recomputing the totals
        for (int k = 0; k < 8 && !queue.empty(); ++k) {
            Panel w = queue.top();
            queue.pop();
            const double mid = 0.5 * (w.u0 + w.u1);
            if (!(mid > w.u0 && mid < w.u1)) {
                done.push_back(w);
                continue;
            }
            queue.push(eval({w.kind, w.u0, mid, 0, 0}));
            queue.push(eval({w.kind, mid, w.u1, 0, 0}));
            ++panels;
        }
        if (queue.empty()) {
            auto [v2, e2] = totals();
            return {v2, e2, evals};
        }
    }
}

} // namespace

const GaussRule& gauss_jacobi01(int n, double alpha, double beta) {
    if (n < 1) fail("PreconditionFailed", "rule size must be positive");
    if (!(alpha > -1) || !(beta > -1)) fail("PreconditionFailed", "Jacobi exponents must exceed -1");
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, alpha, beta}];
    if (!slot) slot = std::make_unique<GaussRule>(golub_welsch(n, alpha, beta));
    return *slot;
}

QuadratureResult integrate_unit(const UnitIntegrand& f, double alpha, double beta, const QuadOptions& opt) {
    int evals = 0;
    if (alpha > -1 && beta > -1) {
        auto global = [&](int n) {
            const GaussRule& g = gauss_jacobi01(n, alpha, beta);
            cplx s = 0;
            for (std::size_t i = 0; i < g.nodes.size(); ++i) {
                const double t = g.nodes[i], omt = 1 - t;
                const double lt = std::log(t), lo = std::log(omt);
                s += g.weights[i] * f({t, omt, lt, lo, -alpha * lt - beta * lo});
            }
            evals += n;
            return s;
        };
        cplx prev = global(16);
        for (int n = 32; n <= opt.max_nodes && std::isfinite(std::abs(prev)); n *= 2) {
            const cplx cur = global(n);
            const double diff = std::abs(cur - prev);
            if (diff <= opt.tol * std::abs(cur)) return {cur, diff, evals};
            prev = cur;
        }
    }

    const double h = 0.25;
    const double log_h = std::log(h);
    // decay scale of the endpoint map: f ~ s^e becomes exp(-(e+1) L tan theta)
    auto scale = [&](double e) { return e > -1 ? std::clamp(1 / (e + 1), -log_h, 1e3) : -log_h; };
    const double L0 = scale(alpha), L1 = scale(beta);
    auto mapped = [&](int kind, double u) -> cplx {
        if (kind == 1) return f({u, 1 - u, std::log(u), std::log1p(-u), 0.0});
        const double L = kind == 0 ? L0 : L1;
        const double tn = std::tan(u);
        const double lsmall = log_h - L * tn;
        const double small = std::exp(lsmall);
        const double ljac = lsmall + std::log(L) + std::log1p(tn * tn);
        if (kind == 0) return f({small, 1 - small, lsmall, std::log1p(-small), ljac});
        return f({1 - small, small, std::log1p(-small), lsmall, ljac});
    };
    const double half_pi = 0.5 * std::numbers::pi;
    return adaptive(mapped, {{0, 0, half_pi, 0, 0}, {1, h, 1 - h, 0, 0}, {2, 0, half_pi, 0, 0}}, opt, evals);
}

QuadratureResult integrate_adaptive(const std::function<cplx(double)>& f, double lo, double hi, const QuadOptions& opt) {
    if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) fail("PreconditionFailed", "need a finite interval lo < hi");
    return adaptive([&](int, double u) { return f(u); }, {{1, lo, hi, 0, 0}}, opt, 0);
}

} // namespace grl
