#pragma once

#include <complex>
#include <vector>

namespace grl {

// Dense real polynomial, coefficients in ascending degree.
struct RealPoly {
    std::vector<double> coeffs;

    RealPoly() = default;
    explicit RealPoly(std::vector<double> c);

    static RealPoly constant(double v);
    static RealPoly monomial(int k, double v = 1.0);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    double coeff(int k) const { return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : 0.0; }
    double max_abs() const;

    // Drops trailing coefficients with |c| <= tol (exact zeros by default).
    RealPoly& trim(double tol = 0.0);

    double operator()(double t) const;
    std::complex<double> operator()(std::complex<double> t) const;

    RealPoly derivative() const;

    friend RealPoly operator+(const RealPoly& x, const RealPoly& y);
    friend RealPoly operator-(const RealPoly& x, const RealPoly& y);
    friend RealPoly operator*(const RealPoly& x, const RealPoly& y);
    friend RealPoly operator*(double s, const RealPoly& x);
};

// Real roots of p in the open interval (lo, hi), via companion-matrix eigenvalues
// polished by a few Newton steps. Multiple roots are reported once.
std::vector<double> real_roots_in(const RealPoly& p, double lo, double hi);

} // namespace grl
