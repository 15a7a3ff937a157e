#include "grl/cfrac.hpp"
#include "grl/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace grl {

double CFrac::alpha(int j) const {
    if (j < static_cast<int>(head.size())) return head[j];
    if (terminating) return 0.0;
    if (tail) return tail(j);
    fail("NoConvergence", "continued fraction coefficient " + std::to_string(j) + " is not available");
}

int CFrac::last() const {
    if (terminating || !tail) return static_cast<int>(head.size()) - 1;
    return -1;
}

namespace {

constexpr double kTiny = 1e-30;

// numerator factors and denominator of alpha_j, j >= 1
using Term = std::array<double, 4>;

CFrac gauss_from_terms(const Params& p, std::function<Term(int)> term) {
    const double scale = std::max({1.0, std::abs(p.a), std::abs(p.b), std::abs(p.c)});
    const int scan = 2 * static_cast<int>(std::ceil(scale)) + 8;
    CFrac f;
    f.head.push_back(1.0);
    for (int j = 1; j <= scan; ++j) {
        const Term t = term(j);
        if (std::abs(t[0]) <= 1e-12 * scale || std::abs(t[1]) <= 1e-12 * scale) {
            f.terminating = true;
            return f;
        }
        f.head.push_back(t[0] * t[1] / (t[2] * t[3]));
    }
    // every factor grows with j inside its parity class
    auto all_pos = [&](int j) {
        const Term t = term(j);
        return t[0] > 0 && t[1] > 0 && t[2] > 0 && t[3] > 0;
    };
    for (int j = 2; j < 4 * scan + 16; ++j) {
        if (all_pos(j) && all_pos(j + 1)) {
            f.positive_from = j;
            if (j == 2 && all_pos(1)) f.positive_from = 1;
            break;
        }
    }
    f.tail = [term](int j) {
        const Term t = term(j);
        return t[0] * t[1] / (t[2] * t[3]);
    };
    return f;
}

} // namespace

CFrac gauss_cfrac_011(const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    return gauss_from_terms(p, [a, b, c](int j) -> Term {
        if (j % 2) {
            const int n = (j - 1) / 2;
            return {a + n, c - b + n, c + 2 * n, c + 2 * n + 1};
        }
        const int n = (j - 2) / 2;
        return {b + n + 1, c - a + n + 1, c + 2 * n + 1, c + 2 * n + 2};
    });
}

CFrac gauss_cfrac_010(const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    return gauss_from_terms(p, [a, b, c](int j) -> Term {
        if (j == 1) return {a, 1.0, c, 1.0};
        if (j % 2 == 0) {
            const int k = j / 2;
            return {b + k, c - a + k - 1, c + 2 * k - 2, c + 2 * k - 1};
        }
        const int k = (j - 1) / 2;
        return {a + k, c - b + k - 1, c + 2 * k - 1, c + 2 * k};
    });
}

cplx eval_cfrac(const CFrac& f, cplx z, double tol, int max_depth, CFracEvalInfo* info) {
    CFracEvalInfo local;
    CFracEvalInfo& inf = info ? *info : local;
    if (f.head.empty()) return 0.0;
    if (f.terminating) {
        // backward recurrence
        const int k = static_cast<int>(f.head.size()) - 1;
        cplx v = 1.0;
        for (int j = k; j >= 1; --j) {
            if (v == cplx(0)) fail("DenominatorZero", "terminating fraction hits a pole at this z");
            v = 1.0 - f.head[j] * z / v;
        }
        inf.depth = k;
        if (v == cplx(0)) fail("DenominatorZero", "terminating fraction hits a pole at this z");
        return f.head[0] / v;
    }
    // modified Lentz on 0 + alpha_0/(1 + (-alpha_1 z)/(1 + ...))
    const int lim = f.last() >= 0 ? f.last() : max_depth;
    cplx val = kTiny, C = val, D = 0.0;
    for (int j = 0; j <= std::min(lim, max_depth); ++j) {
        const cplx an = j == 0 ? cplx(f.head[0]) : -f.alpha(j) * z;
        D = 1.0 + an * D;
        if (std::abs(D) < kTiny) D = kTiny, ++inf.tiny_substitutions;
        C = 1.0 + an / C;
        if (std::abs(C) < kTiny) C = kTiny, ++inf.tiny_substitutions;
        D = 1.0 / D;
        const cplx delta = C * D;
        val *= delta;
        inf.depth = j;
        if (j > 0 && std::abs(delta - 1.0) < tol) return val;
        if (j > 0 && an == cplx(0)) return val;
    }
    fail("NoConvergence", "continued fraction did not converge within " + std::to_string(inf.depth) + " levels");
}

namespace {

template <class T>
T det_pivoting(std::vector<std::vector<T>> M) {
    using std::abs;
    const int n = static_cast<int>(M.size());
    T det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (M[i][k] != 0 && (piv < 0 || abs(M[i][k]) > abs(M[piv][k]))) piv = i;
        if (piv < 0) return T(0);
        if (piv != k) std::swap(M[piv], M[k]), det = -det;
        det *= M[k][k];
        for (int i = k + 1; i < n; ++i) {
            const T f = M[i][k] / M[k][k];
            for (int j = k; j < n; ++j) M[i][j] -= f * M[k][j];
        }
    }
    return det;
}

// Bareiss on the full Hankel matrix; the k-th pivot is the k-th leading minor.
// When a pivot vanishes the remaining minors are computed one by one.
template <class T>
std::vector<T> hankel_impl(const std::vector<T>& c, int n, int p) {
    if (n < 0 || p < 0 || p > 1) fail("PreconditionFailed", "hankel_dets needs n >= 0 and p in {0,1}");
    if (n > 0 && static_cast<int>(c.size()) < 2 * n - 1 + p)
        fail("PreconditionFailed", "not enough coefficients for the requested Hankel determinants");
    std::vector<std::vector<T>> M(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = c[i + j + p];
    std::vector<T> out;
    T prev = 1;
    int k = 0;
    for (; k < n; ++k) {
        if (M[k][k] == 0) break;
        out.push_back(M[k][k]);
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    for (; k < n; ++k) {
        std::vector<std::vector<T>> S(k + 1, std::vector<T>(k + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) S[i][j] = c[i + j + p];
        out.push_back(det_pivoting(S));
    }
    return out;
}

} // namespace

std::vector<double> hankel_dets(const std::vector<double>& c, int n, int p) {
    return hankel_impl<double>(c, n, p);
}

std::vector<Rational> hankel_dets(const std::vector<Rational>& c, int n, int p) {
    return hankel_impl<Rational>(c, n, p);
}

namespace {

int dets_needed(int n) { return n / 2 + 1; }

} // namespace

CFracExact series_to_cfrac(const std::vector<Rational>& c, int n) {
    if (n < 0 || static_cast<int>(c.size()) < n + 1)
        fail("PreconditionFailed", "series_to_cfrac needs coefficients c_0..c_n");
    CFracExact out;
    if (c[0] == 0) {
        out.terminating = true;
        return out;
    }
    const int K = dets_needed(n);
    std::vector<Rational> cc = c;
    cc.resize(std::max<std::size_t>(cc.size(), 2 * K + 1), Rational(0));
    std::vector<Rational> D0{Rational(1)}, D1{Rational(1)};
    for (const auto& v : hankel_dets(cc, K, 0)) D0.push_back(v);
    for (const auto& v : hankel_dets(cc, K, 1)) D1.push_back(v);
    out.alphas.push_back(c[0]);
    for (int j = 1; j <= n; ++j) {
        Rational num, den;
        if (j % 2) {
            const int k = (j + 1) / 2;
            num = D0[k - 1] * D1[k];
            den = D0[k] * D1[k - 1];
        } else {
            const int k = j / 2;
            num = D0[k + 1] * D1[k - 1];
            den = D0[k] * D1[k];
        }
        if (num == 0) {
            out.terminating = true;
            return out;
        }
        if (den == 0) fail("PreconditionFailed", "series has no regular C-fraction (vanishing Hankel determinant)");
        out.alphas.push_back(num / den);
    }
    return out;
}

CFrac series_to_cfrac(const std::vector<double>& c, int n) {
    if (n < 0 || static_cast<int>(c.size()) < n + 1)
        fail("PreconditionFailed", "series_to_cfrac needs coefficients c_0..c_n");
    CFrac out;
    if (c[0] == 0) {
        out.terminating = true;
        return out;
    }
    const int K = dets_needed(n);
    std::vector<double> cc = c;
    cc.resize(std::max<std::size_t>(cc.size(), 2 * K + 1), 0.0);
    double scale = 0;
    for (int i = 0; i <= std::min(n, static_cast<int>(c.size()) - 1); ++i) scale = std::max(scale, std::abs(c[i]));
    std::vector<double> D0{1.0}, D1{1.0};
    for (double v : hankel_dets(cc, K, 0)) D0.push_back(v);
    for (double v : hankel_dets(cc, K, 1)) D1.push_back(v);
    auto small = [&](const std::vector<double>& D, int k) { return std::abs(D[k]) < 1e-12 * std::pow(scale, k); };
    // rounding noise of D_k relative to its size: disagreement between Bareiss and pivoted elimination
    auto noise_vec = [&](const std::vector<double>& D, int p) {
        std::vector<double> nz(D.size(), 0.0);
        for (int k = 1; k < static_cast<int>(D.size()); ++k) {
            std::vector<std::vector<double>> S(k, std::vector<double>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) S[i][j] = cc[i + j + p];
            const double alt = det_pivoting(S);
            if (D[k] == 0 && alt == 0) nz[k] = HUGE_VAL;
            else nz[k] = std::abs(D[k] - alt) / std::max(std::abs(D[k]), std::abs(alt)) + 1e-16 * k;
        }
        return nz;
    };
    const std::vector<double> N0 = noise_vec(D0, 0), N1 = noise_vec(D1, 1);
    auto noise = [&](const std::vector<double>&, int k, int p) { return p ? N1[k] : N0[k]; };

    out.head.push_back(c[0]);
    for (int j = 1; j <= n; ++j) {
        int kn0, kn1, kd0, kd1;
        if (j % 2) {
            const int k = (j + 1) / 2;
            kn0 = k - 1, kn1 = k, kd0 = k, kd1 = k - 1;
        } else {
            const int k = j / 2;
            kn0 = k + 1, kn1 = k - 1, kd0 = k, kd1 = k;
        }
        // a small determinant only counts as zero when it is not resolved above rounding noise
        if ((small(D0, kn0) && noise(D0, kn0, 0) > 1e-3) || (small(D1, kn1) && noise(D1, kn1, 1) > 1e-3)) {
            out.terminating = true;
            return out;
        }
        const double err = std::max({noise(D0, kn0, 0), noise(D1, kn1, 1), noise(D0, kd0, 0), noise(D1, kd1, 1)});
        if (err > 1e-4)
            fail("IllConditioned", "floating Hankel determinants lost all significant digits at level " +
                                       std::to_string(j) + "; pass exact rational coefficients instead");
        const double v = D0[kn0] * D1[kn1] / (D0[kd0] * D1[kd1]);
        if (!std::isfinite(v))
            fail("IllConditioned", "non-finite coefficient at level " + std::to_string(j) +
                                       "; pass exact rational coefficients instead");
        out.head.push_back(v);
    }
    return out;
}

JFrac contract_to_jfrac(const CFrac& f, int count) {
    JFrac J;
    if (count < 1 || f.head.empty() || f.head[0] == 0) return J;
    J.a_prods.push_back(f.alpha(0));
    J.b_sums.push_back(f.alpha(1));
    for (int j = 1; j < count; ++j) {
        if (f.last() >= 0 && 2 * j > f.last() && !f.terminating) break;
        const double prod = f.alpha(2 * j - 1) * f.alpha(2 * j);
        if (prod == 0) break;
        J.a_prods.push_back(prod);
        J.b_sums.push_back(f.alpha(2 * j) + (f.last() >= 0 && 2 * j + 1 > f.last() ? 0.0 : f.alpha(2 * j + 1)));
    }
    return J;
}

cplx eval_jfrac(const JFrac& J, cplx z) {
    if (J.a_prods.empty()) return 0.0;
    const int m = static_cast<int>(J.b_sums.size()) - 1;
    cplx v = z - J.b_sums[m];
    for (int j = m; j >= 1; --j) {
        if (v == cplx(0)) fail("DenominatorZero", "J-fraction hits a pole at this z");
        v = z - J.b_sums[j - 1] - J.a_prods[j] / v;
    }
    if (v == cplx(0)) fail("DenominatorZero", "J-fraction hits a pole at this z");
    return -J.a_prods[0] / v;
}

double sup_abs_alpha(const CFrac& f, int count) {
    double s = 0;
    const int lim = f.last() >= 0 ? std::min(f.last(), count) : count;
    for (int j = 1; j <= lim; ++j) s = std::max(s, std::abs(f.alpha(j)));
    return s;
}

} // namespace grl
