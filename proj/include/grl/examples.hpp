#pragma once

#include "grl/hyp2f1.hpp"
#include "grl/poly.hpp"
#include "grl/shifts.hpp"

#include <array>

namespace grl {

struct ExampleSpec {
    int index;
    int n1, n2, m;
    Params params; // a parameter set where the representation applies
};

const std::array<ExampleSpec, 15>& example_table();

// 1..15 for a tabulated shift triple, 0 otherwise
int example_index(const Shifts& s);
const ExampleSpec& example_spec(int idx);

// Closed-form B * P_r(t) of the tabulated examples.
double example_BP(int idx, const Params& p, double t);

// (N, Q) used by the representation for the tabulated examples.
struct OrderAndQ {
    int N = 0;
    RealPoly Q;
};
OrderAndQ example_NQ(int idx, const Params& p);

} // namespace grl
