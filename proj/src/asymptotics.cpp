#include "grl/asymptotics.hpp"
#include "grl/examples.hpp"

#include <algorithm>
#include <cmath>

namespace grl {

const char* to_string(DegenerateCase d) {
    switch (d) {
    case DegenerateCase::none: return "none";
    case DegenerateCase::a_or_b_nonpos_int_num: return "a_or_b_nonpos_int_num";
    case DegenerateCase::a_or_b_nonpos_int_den: return "a_or_b_nonpos_int_den";
    case DegenerateCase::euler_reduced_num: return "euler_reduced_num";
    case DegenerateCase::euler_reduced_den: return "euler_reduced_den";
    }
    return "none";
}

namespace {

bool nonneg_int(double x) { return is_nonpos_int(-x); }

enum class Kind { generic, poly, euler };

struct Side {
    Kind kind = Kind::generic;
    double exponent = 0;
    int log = 0;
};

// behaviour of 2F1(x1,x2;x3;z) at z = 1
Side side_at_one(double x1, double x2, double x3) {
    const double eta = x3 - x1 - x2;
    if (is_nonpos_int(x1) || is_nonpos_int(x2)) return {Kind::poly, 0.0, 0};
    if (nonneg_int(x1 - x3) || nonneg_int(x2 - x3)) return {Kind::euler, eta, 0};
    if (is_integer(eta) && std::round(eta) == 0) return {Kind::generic, 0.0, 1};
    return {Kind::generic, std::min(eta, 0.0), 0};
}

struct InfSide {
    double exponent = 0;
    bool A_first_zero = false, A_second_zero = false;
    bool log = false;
    bool unclassified = false;
};

// growth exponent of 2F1(x1,x2;x3;-z) as z -> +inf
InfSide side_at_infinity(double x1, double x2, double x3) {
    InfSide s;
    s.A_first_zero = A_vanishes(x1, x2, x3);
    s.A_second_zero = A_vanishes(x2, x1, x3);
    const bool p1 = is_nonpos_int(x1), p2 = is_nonpos_int(x2);
    if (p1 || p2) {
        s.exponent = std::min(p1 ? -std::round(x1) : HUGE_VAL, p2 ? -std::round(x2) : HUGE_VAL);
        return s;
    }
    if (s.A_first_zero && s.A_second_zero) {
        s.exponent = -std::max(x1, x2);
    } else if (s.A_second_zero) {
        s.exponent = -x1;
    } else if (s.A_first_zero) {
        s.exponent = -x2;
    } else {
        s.exponent = -std::min(x1, x2);
        s.log = is_integer(x1 - x2);
        return s;
    }
    // Euler-reduced with coinciding upper parameters is not enumerated
    s.unclassified = is_integer(x1 - x2) && std::round(x1 - x2) == 0;
    return s;
}

double A_value(double x1, double x2, double x3) { return gamma_ratio({x3, x2 - x1}, {x3 - x1, x2}); }

} // namespace

bool A_vanishes(double x1, double x2, double x3) { return nonneg_int(x1 - x3) || is_nonpos_int(x2); }

AsymptoticAtOne classify_at_one(const Params& p, const Shifts& s) {
    const Side num = side_at_one(p.a + s.n1, p.b + s.n2, p.c + s.m);
    const Side den = side_at_one(p.a, p.b, p.c);
    AsymptoticAtOne out;
    out.nu = num.exponent - den.exponent;
    // exponent differences like (c-a-b-1)_- - (c-a-b)_- are integers up to rounding
    if (dist_to_int(out.nu) < 1e-12) out.nu = std::round(out.nu);
    out.log_flag = num.log - den.log;
    if (den.kind == Kind::poly) out.degenerate_case = DegenerateCase::a_or_b_nonpos_int_den;
    else if (num.kind == Kind::poly) out.degenerate_case = DegenerateCase::a_or_b_nonpos_int_num;
    else if (den.kind == Kind::euler) out.degenerate_case = DegenerateCase::euler_reduced_den;
    else if (num.kind == Kind::euler) out.degenerate_case = DegenerateCase::euler_reduced_num;
    out.integrable = out.nu > -1;
    return out;
}

AsymptoticAtInfinity classify_at_infinity(const Params& p, const Shifts& s) {
    const double a = p.a, b = p.b, c = p.c;
    const double x1 = a + s.n1, x2 = b + s.n2, x3 = c + s.m;
    const InfSide num = side_at_infinity(x1, x2, x3);
    const InfSide den = side_at_infinity(a, b, c);

    AsymptoticAtInfinity out;
    out.alpha = num.exponent;
    out.gamma = den.exponent;
    out.leading_exponent = out.alpha - out.gamma;
    out.has_log = num.log || den.log;
    out.unclassified = num.unclassified || den.unclassified;

    const bool all_nonzero = !num.A_first_zero && !num.A_second_zero && !den.A_first_zero && !den.A_second_zero;
    if (all_nonzero && !is_integer(a - b) && !is_nonpos_int(x3)) {
        const double A12 = x1 <= x2 ? A_value(x1, x2, x3) : A_value(x2, x1, x3);
        const double A34 = a <= b ? A_value(a, b, c) : A_value(b, a, c);
        if (A34 != 0 && std::isfinite(A12 / A34)) {
            out.A_ratio_defined = true;
            out.A_ratio = A12 / A34;
        }
    }

    if (const int idx = example_index(s)) {
        const OrderAndQ nq = example_NQ(idx, p);
        out.N = nq.N;
        out.Q = nq.Q;
        out.from_example_table = true;
    } else {
        out.N = static_cast<int>(std::ceil(std::max(out.leading_exponent, 0.0) - 1e-12)) + 1;
        out.Q = RealPoly();
    }
    return out;
}

} // namespace grl
