#include "grl/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace grl {

RealPoly::RealPoly(std::vector<double> c) : coeffs(std::move(c)) { trim(); }

RealPoly RealPoly::constant(double v) { return RealPoly({v}); }

RealPoly RealPoly::monomial(int k, double v) {
    std::vector<double> c(k + 1, 0.0);
    c[k] = v;
    return RealPoly(std::move(c));
}

double RealPoly::max_abs() const {
    double m = 0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

RealPoly& RealPoly::trim(double tol) {
    while (!coeffs.empty() && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
    return *this;
}

double RealPoly::operator()(double t) const {
    double s = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * t + *it;
    return s;
}

std::complex<double> RealPoly::operator()(std::complex<double> t) const {
    std::complex<double> s = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * t + *it;
    return s;
}

RealPoly RealPoly::derivative() const {
    std::vector<double> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.push_back(k * coeffs[k]);
    return RealPoly(std::move(d));
}

RealPoly operator+(const RealPoly& x, const RealPoly& y) {
    std::vector<double> c(std::max(x.coeffs.size(), y.coeffs.size()), 0.0);
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) c[k] += x.coeffs[k];
    for (std::size_t k = 0; k < y.coeffs.size(); ++k) c[k] += y.coeffs[k];
    return RealPoly(std::move(c));
}

RealPoly operator-(const RealPoly& x, const RealPoly& y) { return x + (-1.0) * y; }

RealPoly operator*(const RealPoly& x, const RealPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<double> c(x.coeffs.size() + y.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        for (std::size_t j = 0; j < y.coeffs.size(); ++j) c[i + j] += x.coeffs[i] * y.coeffs[j];
    return RealPoly(std::move(c));
}

RealPoly operator*(double s, const RealPoly& x) {
    std::vector<double> c = x.coeffs;
    for (double& v : c) v *= s;
    return RealPoly(std::move(c));
}

std::vector<double> real_roots_in(const RealPoly& p, double lo, double hi) {
    std::vector<double> out;
    RealPoly q = p;
    q.trim(1e-14 * p.max_abs());
    const int n = q.degree();
    if (n < 1) return out;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -q.coeffs[i] / q.coeffs[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    const RealPoly dq = q.derivative();
    for (int i = 0; i < n; ++i) {
        const auto ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) > 1e-7 * std::max(1.0, std::abs(ev))) continue;
        double t = ev.real();
        for (int it = 0; it < 4; ++it) {
            const double d = dq(t);
            if (d == 0) break;
            t -= q(t) / d;
        }
        if (t > lo && t < hi) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-9; }),
              out.end());
    return out;
}

} // namespace grl
