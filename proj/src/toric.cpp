#include "singpoincare/toric.hpp"

#include <numeric>
#include <stdexcept>

namespace singpoincare {

ToricSurface toric_surface(long p, long q) {
    if (p < 1 || p >= q || std::gcd(p, q) != 1)
        throw std::invalid_argument("toric_surface needs 0 < p < q with gcd(p, q) = 1");
    ToricSurface ts;
    ts.p = p;
    ts.q = q;
    ts.b = hj(q, q - p);
    ts.c = hj(q, p);
    ts.t = long(ts.c.entries.size());
    return ts;
}

std::vector<std::array<long, 2>> resolution_vectors(const ToricSurface& ts) {
    const auto& b = ts.b.entries;
    std::vector<std::array<long, 2>> v;
    v.push_back({1, 0});
    v.push_back({1, 1});
    for (long bi : b) {
        const auto& v1 = v[v.size() - 1];
        const auto& v0 = v[v.size() - 2];
        v.push_back({bi * v1[0] - v0[0], bi * v1[1] - v0[1]});
    }
    if (v.back()[0] != ts.p || v.back()[1] != ts.q)
        throw std::logic_error("fan recursion must terminate at (p, q)");
    return v;
}

StagePlan stage_plan(const ToricSurface& ts) {
    StagePlan plan;
    const auto& b = ts.b.entries;
    const long s = long(b.size());
    long interior_heavy = 0;
    for (long i = 1; i + 1 < s; ++i)
        if (b[i] != 2) ++interior_heavy;
    plan.a = (s == 1 ? 1 : 2) + interior_heavy;
    long j = 0;
    for (long cj : ts.c.entries) {
        ++j;
        if (cj == 3) {
            ++plan.b_count;
        } else if (cj > 3) {
            ++plan.r_count;
            ResidualSing r;
            r.stage = j;
            r.d = cj - 3;
            r.rounds = (r.d + 1) / 2;
            r.nontransversal = (r.d % 2 == 0);
            r.depth = r.nontransversal ? r.d / 2 + 1 : 0;
            plan.residuals.push_back(r);
        }
    }
    if (plan.a - plan.r_count - 1 != plan.b_count)
        throw std::logic_error("insertion count identity a - r - 1 = b violated");
    return plan;
}

std::vector<std::pair<StratumIndex, StratumWeight>> strata_numerical_data(const ToricSurface& ts) {
    std::vector<std::pair<StratumIndex, StratumWeight>> out;
    out.push_back({{-1, 0, 0}, {1, ts.t, ts.t}});
    out.push_back({{0, 0, 0}, {1, ts.t + 2, 1}});
    StagePlan plan = stage_plan(ts);
    long i = 0;
    for (const auto& r : plan.residuals) {
        ++i;
        for (long j = 1; j <= r.rounds; ++j)
            out.push_back({{1, i, j}, {j + 1, (j + 1) * (ts.t + 1) + 1, 1}});
    }
    return out;
}

}  // namespace singpoincare
