#pragma once

#include "grl/hyp2f1.hpp"
#include "grl/poly.hpp"
#include "grl/shifts.hpp"

namespace grl {

enum class DegenerateCase {
    none,
    a_or_b_nonpos_int_num,
    a_or_b_nonpos_int_den,
    euler_reduced_num,
    euler_reduced_den,
};

const char* to_string(DegenerateCase d);

// R ~ M (1-z)^nu [log(1-z)]^log_flag as z -> 1
struct AsymptoticAtOne {
    double nu = 0;
    int log_flag = 0;
    DegenerateCase degenerate_case = DegenerateCase::none;
    bool integrable = true; // nu > -1
};

AsymptoticAtOne classify_at_one(const Params& p, const Shifts& s);

// R(-z) ~ (A_{1,2}/A_{3,4}) z^{alpha-gamma} as z -> +inf
struct AsymptoticAtInfinity {
    double alpha = 0, gamma = 0;
    double leading_exponent = 0;
    bool has_log = false;
    bool A_ratio_defined = false;
    double A_ratio = 0;
    RealPoly Q;
    int N = 0;
    bool from_example_table = false;
    bool unclassified = false;
};

AsymptoticAtInfinity classify_at_infinity(const Params& p, const Shifts& s);

// A(x1,x2,x3) = Gamma(x3)Gamma(x2-x1)/(Gamma(x3-x1)Gamma(x2)) vanishes iff x1-x3 or -x2 is in N_0
bool A_vanishes(double x1, double x2, double x3);

} // namespace grl
