#include "gen.hpp"

#include "grl/cfrac.hpp"
#include "grl/error.hpp"
#include "grl/shifts.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace grl;
using gen::rel;

namespace {

CFrac finite(std::vector<double> alphas) {
    CFrac f;
    f.head = std::move(alphas);
    f.terminating = true;
    return f;
}

// bounded generator, |alpha_j| <= bound
CFrac random_fraction(gen::Rng& g, double bound) {
    std::vector<double> a(64);
    for (auto& v : a) v = g.uniform(-bound, bound);
    CFrac f;
    f.head = {g.uniform(0.5, 2)};
    f.tail = [a](int j) { return a[j % 64]; };
    return f;
}

} // namespace

TEST(GaussCfrac, Coefficients011) {
    const Params p(0.3, 0.7, 1.9);
    const auto f = gauss_cfrac_011(p);
    EXPECT_DOUBLE_EQ(f.alpha(0), 1);
    EXPECT_NEAR(f.alpha(1), p.a * (p.c - p.b) / (p.c * (p.c + 1)), 1e-16);
    EXPECT_NEAR(f.alpha(1000), 0.25, 1e-3);
}

TEST(GaussCfrac, Coefficients010) {
    const Params p(0.3, 0.7, 1.9);
    const auto f = gauss_cfrac_010(p);
    EXPECT_NEAR(f.alpha(1), p.a / p.c, 1e-16);
    EXPECT_NEAR(f.alpha(2), (p.b + 1) * (p.c - p.a) / (p.c * (p.c + 1)), 1e-16);
    const auto z = gauss_cfrac_010(Params(0, 0.7, 1.9));
    EXPECT_TRUE(z.terminating);
    EXPECT_NEAR(eval_cfrac(z, 0.6).real(), 1, 1e-15);
}

TEST(GaussCfrac, Terminating) {
    const auto f = gauss_cfrac_011(Params(-2, 0.5, 1.5));
    EXPECT_TRUE(f.terminating);
    EXPECT_EQ(f.last(), 4);
    for (cplx z : {cplx(0.3), cplx(-5, 1)})
        EXPECT_LT(rel(eval_cfrac(f, z), ratio(Params(-2, 0.5, 1.5), derive_shifts(0, 1, 1), z)), 1e-13);
}

TEST(EvalCfrac, Vectors) {
    EXPECT_NEAR(eval_cfrac(finite({1, 1}), 0.3).real(), 1 / 0.7, 1e-15);
    EXPECT_NEAR(eval_cfrac(gauss_cfrac_011(Params(1, 0, 1)), 0.5).real(), 2 * std::log(2.0), 1e-13);
    const Params p(0.5, 0.25, 1.25);
    const auto f = gauss_cfrac_011(p);
    for (cplx z : {cplx(0.2), cplx(-0.2), cplx(0.1, 0.15), cplx(0, -0.2)})
        EXPECT_LT(rel(eval_cfrac(f, z), ratio(p, derive_shifts(0, 1, 1), z)), 1e-10);
}

TEST(Hankel, Vectors) {
    const auto ones = hankel_dets(std::vector<double>(6, 1.0), 2, 0);
    EXPECT_DOUBLE_EQ(ones[0], 1);
    EXPECT_DOUBLE_EQ(ones[1], 0);
    const std::vector<double> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
    for (int p : {0, 1})
        for (double d : hankel_dets(catalan, 5, p)) EXPECT_NEAR(d, 1, 1e-9);
}

TEST(SeriesToCfrac, Vectors) {
    auto g = series_to_cfrac(std::vector<double>(8, 1.0), 3);
    EXPECT_TRUE(g.terminating);
    ASSERT_EQ(g.head.size(), 2u);
    EXPECT_DOUBLE_EQ(g.head[0], 1);
    EXPECT_DOUBLE_EQ(g.head[1], 1);
    auto c = series_to_cfrac(std::vector<double>{1, 0, 0, 0, 0}, 2);
    EXPECT_TRUE(c.terminating);
    EXPECT_EQ(c.head.size(), 1u);
}

TEST(SeriesToCfrac, ExactGaussCoefficients) {
    const Rational a(1, 2), b(1, 4), c(5, 4);
    const auto series = ratio_taylor_exact(a, b, c, derive_shifts(0, 1, 1), 44);
    const auto f = series_to_cfrac(series, 20);
    ASSERT_EQ(f.alphas.size(), 21u);
    EXPECT_EQ(f.alphas[0], 1);
    for (int j = 1; j <= 20; ++j) {
        const int n = j / 2;
        const Rational expect = j % 2 ? Rational((a + n) * (c - b + n) / ((c + 2 * n) * (c + 2 * n + 1)))
                                      : Rational((b + n) * (c - a + n) / ((c + 2 * n - 1) * (c + 2 * n)));
        EXPECT_EQ(f.alphas[j], expect) << "alpha_" << j;
    }
}

TEST(JFrac, Vectors) {
    const auto J = contract_to_jfrac(finite({1, 1}), 4);
    ASSERT_EQ(J.a_prods.size(), 1u);
    EXPECT_DOUBLE_EQ(J.a_prods[0], 1);
    EXPECT_DOUBLE_EQ(J.b_sums[0], 1);
    const auto f = gauss_cfrac_011(Params(1, 0, 1));
    const cplx z = 4;
    EXPECT_LT(rel(eval_jfrac(contract_to_jfrac(f, 400), z), -1.0 / z * eval_cfrac(f, 1.0 / z)), 1e-10);
}

// properties

TEST(CfracProperty, GaussOddIdentity) {
    gen::Rng g(31);
    for (int i = 0; i < 100; ++i) {
        const Params p = g.params(-3, 3);
        const auto f = gauss_cfrac_011(p);
        if (f.terminating) continue;
        for (int n = 0; n < 10; ++n) {
            const double lhs = f.alpha(2 * n + 1) * (p.c + 2 * n) * (p.c + 2 * n + 1);
            const double rhs = (p.a + n) * (p.c - p.b + n);
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST(CfracProperty, SeriesCorrespondenceFloating) {
    gen::Rng g(32);
    for (int i = 0; i < 20; ++i) {
        const Params p = g.stieltjes_params();
        const auto c = ratio_taylor(p, derive_shifts(0, 1, 1), 12);
        const auto f = series_to_cfrac(c, 8);
        // series of alpha_0 / (1 - alpha_1 z / (1 - ...)), expanded bottom-up
        const auto back = [&] {
            std::vector<double> v(9, 0.0);
            v[0] = 1;
            for (int j = static_cast<int>(f.head.size()) - 1; j >= 1; --j) {
                // w = 1 - alpha_j z / v
                std::vector<double> inv(9, 0.0);
                inv[0] = 1 / v[0];
                for (int k = 1; k < 9; ++k) {
                    double s = 0;
                    for (int q = 1; q <= k; ++q) s += v[q] * inv[k - q];
                    inv[k] = -s / v[0];
                }
                std::vector<double> w(9, 0.0);
                w[0] = 1;
                for (int k = 1; k < 9; ++k) w[k] = -f.head[j] * inv[k - 1];
                v = w;
            }
            std::vector<double> inv(9, 0.0);
            inv[0] = f.head[0] / v[0];
            for (int k = 1; k < 9; ++k) {
                double s = 0;
                for (int q = 1; q <= k; ++q) s += v[q] * inv[k - q];
                inv[k] = -s / v[0];
            }
            return inv;
        }();
        for (int k = 0; k < 9; ++k) EXPECT_LT(std::abs(back[k] - c[k]), 1e-8 * std::max(1.0, std::abs(c[k]))) << k;
    }
}

TEST(CfracProperty, SeriesCorrespondenceExact) {
    gen::Rng g(33);
    for (int i = 0; i < 6; ++i) {
        const Rational a(g.integer(1, 9), g.integer(2, 7)), b(g.integer(1, 9), g.integer(2, 7));
        const Rational c = a + b + Rational(g.integer(1, 5), 3);
        const auto series = ratio_taylor_exact(a, b, c, derive_shifts(0, 1, 1), 14);
        const auto f = series_to_cfrac(series, 12);
        // the fraction's series, exact, bottom-up
        const int K = 13;
        std::vector<Rational> v(K, Rational(0));
        v[0] = 1;
        auto inverse = [&](const std::vector<Rational>& s, const Rational& lead) {
            std::vector<Rational> r(K, Rational(0));
            r[0] = lead / s[0];
            for (int k = 1; k < K; ++k) {
                Rational acc = 0;
                for (int q = 1; q <= k; ++q) acc += s[q] * r[k - q];
                r[k] = -acc / s[0];
            }
            return r;
        };
        for (int j = static_cast<int>(f.alphas.size()) - 1; j >= 1; --j) {
            const auto inv = inverse(v, Rational(1));
            std::vector<Rational> w(K, Rational(0));
            w[0] = 1;
            for (int k = 1; k < K; ++k) w[k] = -f.alphas[j] * inv[k - 1];
            v = w;
        }
        const auto back = inverse(v, f.alphas[0]);
        for (int k = 0; k < K; ++k) EXPECT_EQ(back[k], series[k]) << k;
    }
}

TEST(CfracProperty, Worpitzky) {
    gen::Rng g(34);
    for (int i = 0; i < 50; ++i) {
        const double bound = g.uniform(0.1, 3);
        const auto f = random_fraction(g, bound);
        const double sup = sup_abs_alpha(f, 64);
        const cplx z = g.in_disc(0.999 / (4 * sup));
        CFracEvalInfo info;
        const cplx v = eval_cfrac(f, z, 1e-14, 100000, &info);
        EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
        EXPECT_LT(info.depth, 100000);
        // the Worpitzky value set: |v / alpha_0 - 4/3| <= 2/3
        EXPECT_LE(std::abs(v / f.head[0] - 4.0 / 3.0), 2.0 / 3.0 + 1e-12);
    }
}

TEST(CfracProperty, JContraction) {
    gen::Rng g(35);
    for (int i = 0; i < 30; ++i) {
        const auto f = i % 2 ? random_fraction(g, g.uniform(0.1, 2)) : gauss_cfrac_011(g.stieltjes_params());
        const double sup = sup_abs_alpha(f, 200);
        const cplx z = std::polar(g.uniform(4 * sup, 40 * sup) + 1e-3, g.uniform(-M_PI, M_PI));
        const cplx direct = -1.0 / z * eval_cfrac(f, 1.0 / z);
        const cplx viaJ = eval_jfrac(contract_to_jfrac(f, 400), z);
        EXPECT_LT(std::abs(direct - viaJ), 1e-9 * std::max(1.0, std::abs(direct))) << i << " z=" << z;
    }
}

TEST(CfracProperty, MatchesRatioInDisc) {
    gen::Rng g(36);
    for (int i = 0; i < 100; ++i) {
        const Params p = g.params(-1.5, 2.5);
        const auto f = gauss_cfrac_011(p);
        const double sup = sup_abs_alpha(f, 400);
        const cplx z = g.in_disc(std::min(0.2, 0.9 / (4 * sup)));
        EXPECT_LT(rel(eval_cfrac(f, z), ratio(p, derive_shifts(0, 1, 1), z)), 1e-10) << p.a << " " << p.b << " " << p.c;
    }
}
