#pragma once

#include <array>
#include <vector>

#include "singpoincare/contfrac.hpp"

namespace singpoincare {

// Normal toric surface singularity of type (p, q), 0 < p < q, gcd(p, q) = 1.
// b = hj(q, q-p) drives the minimal resolution fan, c = hj(q, p) is the dual
// expansion whose entries control the singular fibers; t = len(c).
struct ToricSurface {
    long p = 0;
    long q = 0;
    HJExpansion b;
    HJExpansion c;
    long t = 0;
};

ToricSurface toric_surface(long p, long q);

// Rays of the resolved fan: v_0 = (1,0), v_1 = (1,1), v_{j+1} = b_j v_j - v_{j-1};
// ends at v_{s+1} = (p, q). Consecutive pairs have determinant 1 and every vector
// is primitive.
std::vector<std::array<long, 2>> resolution_vectors(const ToricSurface& ts);

// Residual singularity of type A_d left at a fiber point with c_j > 3.
// It resolves in ceil(d/2) rounds of point blow-ups; when d is even the last
// round leaves a nontransversal tangency point of depth d/2 + 1.
struct ResidualSing {
    long stage = 0;  // index j into c (1-based)
    long d = 0;
    long rounds = 0;
    bool nontransversal = false;
    long depth = 0;  // valid when nontransversal
};

// Combinatorics of the first modification and its residual repairs:
// a  = number of distinct rays inserted by the first blow-up,
//      |{v_1, v_s} union {interior v_i with b_i != 2}|
// b_count = fiber points with c_j = 3 (simple tangency)
// r_count = fiber points with c_j > 3 (residual A_{c_j - 3})
// The identity a - r_count - 1 = b_count holds and is asserted.
struct StagePlan {
    long a = 0;
    long b_count = 0;
    long r_count = 0;
    std::vector<ResidualSing> residuals;
};

StagePlan stage_plan(const ToricSurface& ts);

// Strata bookkeeping for the resolved family. kind -1 is the strict transform
// (codimension t), kind 0 the first exceptional divisor, kind 1 the round-j
// divisor over residual point i. N is the jet-order weight, nu the Jacobian
// weight of the divisor.
struct StratumIndex {
    long kind = 0;
    long i = 0;
    long j = 0;
    bool operator==(const StratumIndex&) const = default;
};

struct StratumWeight {
    long N = 0;
    long nu = 0;
    long codim = 0;
};

std::vector<std::pair<StratumIndex, StratumWeight>> strata_numerical_data(const ToricSurface& ts);

}  // namespace singpoincare
