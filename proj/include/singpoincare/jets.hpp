#pragma once

#include <cstdint>
#include <vector>

#include "singpoincare/curve.hpp"

namespace singpoincare {

// Number of n-truncations over F_q of depth-M solution jets of x z = y^c.
// Enumerates coefficient vectors of (x, y) with zero constant term and solves
// for z analytically; cost is accounted as q^(3M) tuples against the budget.
struct JetCountRequest {
    long c = 2;
    long n = 0;
    long q = 2;          // prime
    long max_depth = 24;
    double budget = 1e13;
};

struct JetCountResult {
    long long count = 0;
    long depth = 0;      // first depth M with count(M) == count(M+1)
    bool stabilized = false;
};

long long jet_count_at_depth(long c, long n, long q, long M);
JetCountResult liftable_jet_count(const JetCountRequest& req);

// Bounded search for the contact order of an arc with the branch over F_p:
// max over reparametrizations phi of min(ord(ax - phi^m), ord(ay - g(phi)))
// where g(u) = sum of u^{k_i}. Monotone predicate checked by depth-first
// search over phi coefficients with exact finalized-coefficient pruning.
struct DxSearchResult {
    bool lower_bound = false;  // true when the cap was reached
    long value = 0;
    bool operator==(const DxSearchResult&) const = default;
};

DxSearchResult dx_search_oracle(const CurveBranch& br, const std::vector<long>& ax,
                                const std::vector<long>& ay, long p, long depth);

}  // namespace singpoincare
