#pragma once

#include <vector>

namespace singpoincare {

// Hirzebruch-Jung (negative-regular) continued fraction expansion of n/k:
// n/k = b1 - 1/(b2 - 1/(... - 1/bs)), all entries >= 2.
// Preconditions: n >= 2, 1 <= k < n, gcd(n, k) = 1.
struct HJExpansion {
    long n = 0;
    long k = 0;
    std::vector<long> entries;
};

HJExpansion hj(long n, long k);

// Euclidean staircase of a branch with multiplicity m and exponents k1 < k2 < ...
// Stage i divides kappa_i = k_i - k_{i-1} by the stage gcd; within a stage,
// blocks j = 1..w(i) carry quotients a[i][j] and divisors r[i][j]:
//   r[i][1] = gcd(m, k_1, ..., k_{i-1})   (= m when i = 1)
//   kappa_i = a[i][1] r[i][1] + r[i][2],  r[i][1] = a[i][2] r[i][2] + r[i][3], ...
// with the last step exact. a[i][1] = 0 can occur for i >= 2; all later a >= 2
// except that a[i][1] >= 1 when i = 1. r[i][w(i)] equals the next stage gcd,
// and gcd(m, k_1, ..., k_s) = 1.
struct EuclidTable {
    long m = 0;
    std::vector<long> k;                // exponents, strictly increasing, k1 > m
    std::vector<std::vector<long>> a;   // a[i-1][j-1] = a_{i,j}
    std::vector<std::vector<long>> r;   // r[i-1][j-1] = r_{i,j}
    std::vector<long> w;                // block count per stage

    long stages() const { return long(a.size()); }
};

EuclidTable euclid_table(long m, const std::vector<long>& k);

}  // namespace singpoincare
