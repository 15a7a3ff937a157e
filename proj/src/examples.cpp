#include "grl/examples.hpp"
#include "grl/error.hpp"

#include <string>

namespace grl {

const std::array<ExampleSpec, 15>& example_table() {
    static const Params base(0.3, 0.7, 1.9);
    static const Params wide(0.3, 0.6, 2.4);
    static const std::array<ExampleSpec, 15> t{{
        {1, 0, 1, 1, base},
        {2, 0, 1, 0, base},
        {3, 1, 1, 1, wide},
        {4, 1, 1, 2, base},
        {5, 0, 2, 2, base},
        {6, 0, 2, 0, wide},
        {7, 1, 1, 0, wide},
        {8, 0, 0, 1, base},
        {9, 0, 0, -1, base},
        {10, 0, 0, 2, base},
        {11, 0, 1, 2, base},
        {12, 0, -1, 0, base},
        {13, -1, -1, 0, base},
        {14, -1, 1, 0, base},
        {15, -2, -2, 0, base},
    }};
    return t;
}

int example_index(const Shifts& s) {
    for (const auto& e : example_table())
        if (e.n1 == s.n1 && e.n2 == s.n2 && e.m == s.m) return e.index;
    return 0;
}

const ExampleSpec& example_spec(int idx) {
    if (idx < 1 || idx > 15) fail("PreconditionFailed", "example index must be in 1..15, got " + std::to_string(idx));
    return example_table()[idx - 1];
}

double example_BP(int idx, const Params& p, double t) {
    const double a = p.a, b = p.b, c = p.c;
    switch (idx) {
    case 1: return gamma_ratio({c, c + 1}, {a, b + 1, c - a + 1, c - b});
    case 2: return gamma_ratio({c, c}, {a, b + 1, c - a, c - b});
    case 3: return gamma_ratio({c, c + 1}, {a + 1, b + 1, c - a, c - b});
    case 4: return gamma_ratio({c + 1, c + 2}, {a + 1, b + 1, c - a + 1, c - b + 1});
    case 5: return gamma_ratio({c, c + 2}, {a, b + 2, c - a + 2, c - b}) * (c * t + b - a + 1);
    case 6: return gamma_ratio({c, c}, {a, b + 2, c - a, c - b}) * (t * (c - 2 * b - 2) + b + 1 - a);
    case 7: return gamma_ratio({c, c}, {a + 1, b + 1, c - a, c - b}) * (c - a - b - 1);
    case 8: return -gamma_ratio({c, c + 1}, {a, b, c - a + 1, c - b + 1});
    case 9: return gamma_ratio({c, c - 1}, {a, b, c - a, c - b});
    case 10: return gamma_ratio({c, c + 2}, {a, b, c - a + 2, c - b + 2}) * (c * t + a + b - 2 * c - 1);
    case 11: return -gamma_ratio({c, c + 2}, {a, b + 1, c - a + 2, c - b + 1}) * (c * t + b - c);
    case 12: return -gamma_ratio({c, c}, {a, b, c - a, c - b + 1});
    case 13: return -gamma_ratio({c, c}, {a, b, c - a + 1, c - b + 1}) * (c - a - b + 1);
    case 14: return gamma_ratio({c, c}, {a, b + 1, c - a + 1, c - b}) * (a - b - 1);
    case 15: {
        const double r0 = a * a + b * b - (c + 2) * (a + b) + 3 * c + 1;
        const double r1 = c * (c - a - b + 1) + 2 * (a * b - a - b + 1);
        return -gamma_ratio({c, c}, {a, b, c - a + 2, c - b + 2}) * (c - a - b + 2) * (r0 + r1 * t);
    }
    default: fail("PreconditionFailed", "example index must be in 1..15, got " + std::to_string(idx));
    }
}

OrderAndQ example_NQ(int idx, const Params& p) {
    const double a = p.a, b = p.b, c = p.c;
    const bool b_gt_a = b > a;
    auto konst = [](double v) { return OrderAndQ{0, RealPoly::constant(v)}; };
    switch (idx) {
    case 1: return konst(b_gt_a ? c * (b - a) / (b * (c - a)) : 0.0);
    case 2: return konst(b_gt_a ? (b - a) / b : 0.0);
    case 3:
    case 4:
    case 7: return konst(0.0);
    case 5: return konst(b_gt_a ? c * (c + 1) * (b - a) * (b - a + 1) / (b * (b + 1) * (c - a) * (c - a + 1)) : 0.0);
    case 6: return konst(b_gt_a ? (b - a) * (b - a + 1) / (b * (b + 1)) : 0.0);
    case 8: return konst(b_gt_a ? c / (c - a) : c / (c - b));
    case 9: return konst(b_gt_a ? (c - a - 1) / (c - 1) : (c - b - 1) / (c - 1));
    case 10: return konst(b_gt_a ? c * (c + 1) / ((c - a) * (c - a + 1)) : c * (c + 1) / ((c - b) * (c - b + 1)));
    case 11: return konst(b_gt_a ? c * (c + 1) * (b - a) / (b * (c - a) * (c - a + 1)) : 0.0);
    case 12: return {1, RealPoly::monomial(1, b < a ? (b - a) / (c - b) : 0.0)};
    case 13: {
        auto B = [c](double x, double y) { return (x - 1) / (y - c); };
        return {1, RealPoly::monomial(1, a >= b ? B(a, b) : B(b, a))};
    }
    case 14: return {1, RealPoly::monomial(1, a >= b ? 0.0 : (b - a) * (b - a + 1) / (b * (a - c)))};
    case 15: {
        auto g = [c](double x, double y) { return (x - 2) * (x - 1) / ((c - y) * (c - y + 1)); };
        return {2, RealPoly::monomial(2, a >= b ? g(a, b) : g(b, a))};
    }
    default: fail("PreconditionFailed", "example index must be in 1..15, got " + std::to_string(idx));
    }
}

} // namespace grl
