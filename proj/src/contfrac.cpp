#include "singpoincare/contfrac.hpp"

#include <numeric>
#include <stdexcept>

namespace singpoincare {

HJExpansion hj(long n, long k) {
    if (n < 2 || k < 1 || k >= n || std::gcd(n, k) != 1)
        throw std::invalid_argument("hj needs n >= 2, 1 <= k < n, gcd(n, k) = 1");
    HJExpansion e{n, k, {}};
    while (k > 0) {
        long b = (n + k - 1) / k;  // ceil(n / k)
        e.entries.push_back(b);
        long n2 = k, k2 = b * k - n;
        n = n2;
        k = k2;
    }
    return e;
}

EuclidTable euclid_table(long m, const std::vector<long>& k) {
    if (m < 2) throw std::invalid_argument("euclid_table needs m >= 2");
    if (k.empty()) throw std::invalid_argument("euclid_table needs at least one exponent");
    long prev = m;
    for (long ki : k) {
        if (ki <= prev) throw std::invalid_argument("exponents must satisfy m < k1 < k2 < ...");
        prev = ki;
    }
    EuclidTable t;
    t.m = m;
    t.k = k;
    long g = m;  // gcd of m and the exponents seen so far
    for (size_t i = 0; i < k.size(); ++i) {
        long kappa = k[i] - (i == 0 ? 0 : k[i - 1]);
        long g_next = std::gcd(g, k[i]);
        if (g_next >= g)
            throw std::invalid_argument("gcd chain must strictly decrease at every stage");
        std::vector<long> as, rs;
        long x = kappa, y = g;
        rs.push_back(y);
        while (true) {
            as.push_back(x / y);
            long rem = x % y;
            if (rem == 0) break;
            rs.push_back(rem);
            x = y;
            y = rem;
        }
        if (i == 0 && as[0] < 1) throw std::logic_error("first stage quotient must be positive");
        if (rs.back() != g_next) throw std::logic_error("stage remainder disagrees with gcd");
        t.a.push_back(std::move(as));
        t.r.push_back(std::move(rs));
        t.w.push_back(long(t.a.back().size()));
        g = g_next;
    }
    if (g != 1) throw std::invalid_argument("gcd of multiplicity and exponents must reach 1");
    return t;
}

}  // namespace singpoincare
