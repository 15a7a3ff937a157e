#pragma once

#include "grl/cfrac.hpp"
#include "grl/hyp2f1.hpp"
#include "grl/shifts.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace grl {

enum class RunckelCondition { I, II, III, IV, V, none };
const char* to_string(RunckelCondition c);

struct RunckelReport {
    bool satisfied = false;
    RunckelCondition which = RunckelCondition::none;
    std::string details;
};

RunckelReport runckel_check(const Params& p);

enum class BPSign { nonneg, nonpos, sign_changing, identically_zero };
const char* to_string(BPSign s);

BPSign bp_sign_on_unit_interval(const Params& p, const Shifts& s);
BPSign bp_sign_on_unit_interval(const BoundaryDensity& d);

enum class NevanlinnaStatus { classified, not_in_s_union };

// epsilon * f lies in N_kappa^lambda
struct NevanlinnaClass {
    int epsilon = 1;
    int kappa = 0;
    int lambda = 0;
    bool is_rational = false;
    int K = 0;          // degree of f when rational
    int Lambda_deg = 0; // degree of z f when rational
    NevanlinnaStatus status = NevanlinnaStatus::classified;
    bool heuristic = false;
};

NevanlinnaClass classify_gauss_ratio(const Params& p);
NevanlinnaClass classify_terminating_cfrac(const CFrac& f);
NevanlinnaClass classify_nonterminating_cfrac(const CFrac& f, int m_bound, int probe_horizon = 2000);

// Number of eigenvalues of the Pick matrix below -tol_eig * ||H||.
int pick_negative_count(const std::vector<cplx>& points, const std::vector<cplx>& values, double tol_eig = 1e-10);

struct PickOracleResult {
    int max_negative = 0;
    int draws = 0;
    std::uint64_t seed = 0;
};

// Random point sets in the upper half-plane: modulus log-uniform in [0.1, 10],
// argument uniform in (0.1, pi - 0.1).
std::vector<std::vector<cplx>> pick_point_sets(int n_points, int draws, std::uint64_t seed);

PickOracleResult pick_oracle(const std::function<cplx(cplx)>& f, int n_points, int draws = 50,
                             std::uint64_t seed = 20240611, double tol_eig = 1e-10);

} // namespace grl
