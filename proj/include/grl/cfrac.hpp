#pragma once

#include "grl/hyp2f1.hpp"
#include "grl/rational.hpp"

#include <functional>
#include <vector>

namespace grl {

// Regular C-fraction alpha_0 / (1 - alpha_1 z / (1 - alpha_2 z / (1 - ...))).
// A terminating fraction keeps alpha_0..alpha_k (all nonzero) in head and no tail.
// A non-terminating one either has a pure generator in tail or only a finite
// prefix in head (then evaluation may run out of coefficients).
struct CFrac {
    std::vector<double> head;
    std::function<double(int)> tail;
    bool terminating = false;
    // alpha_j > 0 for all j >= positive_from, proven from the closed form (-1: no certificate)
    int positive_from = -1;

    double alpha(int j) const;
    // index of the last available coefficient, -1 if unbounded
    int last() const;
};

CFrac gauss_cfrac_011(const Params& p);
CFrac gauss_cfrac_010(const Params& p);

struct CFracEvalInfo {
    int depth = 0;
    int tiny_substitutions = 0;
};

cplx eval_cfrac(const CFrac& f, cplx z, double tol = 1e-14, int max_depth = 100000,
                CFracEvalInfo* info = nullptr);

// D_1^{(p)}, ..., D_n^{(p)} of the Hankel matrices (c_{i+j+p}).
std::vector<double> hankel_dets(const std::vector<double>& c, int n, int p);
std::vector<Rational> hankel_dets(const std::vector<Rational>& c, int n, int p);

// alpha_0..alpha_n from the series coefficients.
CFrac series_to_cfrac(const std::vector<double>& c, int n);

struct CFracExact {
    std::vector<Rational> alphas;
    bool terminating = false;
};
CFracExact series_to_cfrac(const std::vector<Rational>& c, int n);

// psi(z) = -a_0 / (z - b_0 - a_1 / (z - b_1 - a_2 / (...)))
// with a_0 = alpha_0, a_j = alpha_{2j-1} alpha_{2j}, b_0 = alpha_1, b_j = alpha_{2j} + alpha_{2j+1}.
struct JFrac {
    std::vector<double> a_prods;
    std::vector<double> b_sums;
};

JFrac contract_to_jfrac(const CFrac& f, int count);
cplx eval_jfrac(const JFrac& j, cplx z);

double sup_abs_alpha(const CFrac& f, int count);

} // namespace grl
