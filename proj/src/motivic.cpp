#include "singpoincare/motivic.hpp"

#include <stdexcept>

namespace singpoincare {

namespace {

LaurentPoly L(long e = 1) { return LaurentPoly::lefschetz(e); }
LaurentPoly C(long n) { return LaurentPoly(n); }
LaurentPoly Lm1() { return L() - C(1); }  // L - 1

RationalSeries rs_const(LaurentPoly c) { return RationalSeries(std::move(c)); }

}  // namespace

RationalSeries transversal_integral(const LaurentPoly& cls,
                                    const std::vector<TransversalPiece>& pieces, long d) {
    long codim_total = 0;
    for (const auto& p : pieces) {
        if (p.codim < 1) throw std::invalid_argument("piece codimension must be >= 1");
        codim_total += p.codim;
    }
    if (codim_total > d) throw std::invalid_argument("codimensions exceed ambient dimension");
    RationalSeries acc = rs_const(cls.shifted(-d));
    for (const auto& p : pieces) {
        const long sN = p.alpha.sN;
        const long nu = p.alpha.nu + p.codim;
        if (sN + nu < 1) throw std::invalid_argument("weight violates the filtration bound");
        LaurentPoly lc = L(p.codim) - C(1);
        RationalSeries w =
            RationalSeries::monomial(lc.shifted(-nu), sN).divided_by_factor({-nu, sN});
        acc = acc * w;
    }
    return acc;
}

RationalSeries nontransversal_point_series_d3(long e) {
    if (e < 1) throw std::invalid_argument("tangency depth must be >= 1");
    const long nu1 = 2 * e + 1, nu2 = 2 * e + 2;
    RationalSeries a = RationalSeries::monomial((Lm1() * Lm1()).shifted(-2 * nu2), 2 * e + 1)
                           .divided_by_factor({-1, 1})
                           .divided_by_factor({-nu1, e});
    RationalSeries b = RationalSeries::monomial(LaurentPoly::monomial(1, -nu1), e);
    std::vector<LaurentPoly> pre(e + 2);
    pre[0] = Lm1().shifted(-3);
    pre[e + 1] = Lm1().shifted(-3 - nu2);
    RationalSeries head(std::move(pre), {});
    return (head * (a + b)).divided_by_factor({-2 * nu2, 2 * e + 1});
}

RationalSeries nontransversal_contribution_d3(long e) {
    if (e < 1) throw std::invalid_argument("tangency depth must be >= 1");
    RationalSeries a = RationalSeries::monomial((Lm1() * Lm1()).shifted(2 * e - 1), 2 * e + 1)
                           .divided_by_factor({2, 1})
                           .divided_by_factor({e - 1, e});
    RationalSeries b = RationalSeries::monomial(LaurentPoly::monomial(1, e - 1), e);
    std::vector<LaurentPoly> pre(e + 2);
    pre[0] = -Lm1();
    pre[e + 1] = -Lm1().shifted(e + 1);
    RationalSeries head(std::move(pre), {});
    return (head * (a + b)).divided_by_factor({3, 1}).divided_by_factor({2 * e - 1, 2 * e + 1});
}

RationalSeries nontransversal_point_integral(long e, long t) {
    if (e < 1 || t < 1) throw std::invalid_argument("need e >= 1 and t >= 1");
    std::vector<TransversalPiece> pieces = {
        {{1, 0}, t},                  // strict transform, weight (1, t)
        {{e, e * (t + 1)}, 1},        // tangency divisor, weight (e, e(t+1) + 1)
    };
    return transversal_integral(C(1), pieces, t + 2);
}

RationalSeries even_depth_replacement_display(long e, long t) {
    if (e < 1 || t < 1) throw std::invalid_argument("need e >= 1 and t >= 1");
    LaurentPoly num = (L(t) - C(1)) * Lm1();
    return RationalSeries::monomial(num.shifted(-(e + 1) * (t + 1)), e + 1)
        .divided_by_factor({-t, 1})
        .divided_by_factor({-(e * (t + 1) + 1), e});
}

RationalSeries pair_replacement_display(long t) {
    if (t < 1) throw std::invalid_argument("need t >= 1");
    LaurentPoly num = (L(t) - C(1)) * Lm1();
    return RationalSeries::monomial(num.shifted(-(2 * t + 2)), 3)
        .divided_by_factor({-t, 1})
        .divided_by_factor({-(t + 2), 2});
}

RationalSeries nontransversal_contribution_general(long m, long t) {
    if (m < 1 || t < 1) throw std::invalid_argument("need m >= 1 and t >= 1");
    // numerator polynomial 1 - L^{t+2} T, reused by the first two terms
    std::vector<LaurentPoly> one_minus{C(1), -L(t + 2)};
    RationalSeries head(one_minus, {});

    RationalSeries total;
    if (m > 1) {
        std::vector<LaurentPoly> s1(m);
        for (long j = 1; j <= m - 1; ++j) s1[j] = Lm1().shifted(j);
        RationalSeries term1 = (head * RationalSeries(s1, {}))
                                   .divided_by_factor({2, 1})
                                   .divided_by_factor({m - 1, m});
        total = total - term1;
    }
    RationalSeries term2 = (head * RationalSeries::monomial(Lm1().shifted(1), 1))
                               .divided_by_factor({0, 1})
                               .divided_by_factor({2, 1});
    total = total + term2;
    RationalSeries term3 = RationalSeries::monomial(((L(t) - C(1)) * Lm1()).shifted(2), 2)
                               .divided_by_factor({0, 1})
                               .divided_by_factor({2, 1});
    total = total + term3;
    if (m > 1) {
        std::vector<LaurentPoly> s2(m + 1);
        for (long i = 1; i <= m - 1; ++i) s2[i + 1] = LaurentPoly::monomial(1, i);
        LaurentPoly sq = Lm1() * Lm1();
        RationalSeries term4 =
            (RationalSeries(sq * (projective_class(t) - C(2))) * RationalSeries(s2, {}))
                .divided_by_factor({0, 1})
                .divided_by_factor({m - 1, m});
        total = total - term4;
        RationalSeries term5 =
            (RationalSeries::monomial(sq * (L(t) - C(1)) * C(2) * L(2), 1) * RationalSeries(s2, {}))
                .divided_by_factor({0, 1})
                .divided_by_factor({m - 1, m})
                .divided_by_factor({2, 1});
        total = total - term5;
    }
    return total;
}

RationalSeries poincare_transform(const RationalSeries& D, long d) {
    RationalSeries scaled = rs_substitute_T_scale(D, d);
    RationalSeries res = rs_const(C(1)) - RationalSeries::monomial(C(1).shifted(d), 0) * scaled;
    return res.divided_by_factor({d, 1});
}

RationalSeries pgeom_toric_closed(const ToricSurface& ts) {
    RationalSeries p = rs_const(C(1)).divided_by_factor({2, 1});
    for (long cj : ts.c.entries) {
        if (cj <= 2) continue;
        const long m = cj / 2;
        if (cj % 2 == 0) {
            std::vector<LaurentPoly> num(m);
            for (long i = 1; i <= m - 1; ++i) num[i] = Lm1().shifted(i);
            p = p + RationalSeries(std::move(num), {{2, 1}, {m - 1, m}});
        } else {
            std::vector<LaurentPoly> num(2 * m + 1);
            for (long i = 1; i <= m; ++i) {
                num[i] += LaurentPoly::monomial(1, i);
                num[m + i] += LaurentPoly::monomial(1, m - 1 + i);
            }
            num[m] -= LaurentPoly::monomial(1, m - 1);
            for (auto& c : num) c = c * Lm1();
            p = p + RationalSeries(std::move(num), {{2, 1}, {2 * m - 1, 2 * m + 1}});
        }
    }
    return p;
}

RationalSeries pgeom_toric_stratified_t1(const ToricSurface& ts) {
    if (ts.t != 1) throw std::invalid_argument("stratified assembly implemented for t = 1 only");
    const long c = ts.c.entries.at(0);
    const StagePlan plan = stage_plan(ts);

    // strata weights: strict transform and the divisor chain, from the shared table
    const TransversalPiece px{{1, 0}, 1};
    auto pdiv = [](long depth) { return TransversalPiece{{depth, 2 * depth}, 1}; };

    auto cls = [](long a2, long a1, long a0) {
        return LaurentPoly::monomial(a2, 2) + LaurentPoly::monomial(a1, 1) + C(a0);
    };

    RationalSeries D;
    auto add = [&D](const LaurentPoly& cl, const std::vector<TransversalPiece>& ps) {
        D = D + transversal_integral(cl, ps, 3);
    };

    const long R = plan.residuals.empty() ? 0 : plan.residuals[0].rounds;
    const bool odd_tail = !plan.residuals.empty() && plan.residuals[0].nontransversal;

    if (c == 2) {
        // smooth-family fiber: plain line plus the conic section of the strict transform
        add(cls(1, 0, 0), {pdiv(1)});
        add(cls(0, 1, 1), {px, pdiv(1)});
    } else {
        add(cls(1, -1, 0), {pdiv(1)});
        for (long j = 1; j < R; ++j) add(cls(1, -2, 1), {pdiv(j + 1)});
        if (R >= 1) add(odd_tail ? cls(1, -2, 1) : cls(1, -1, 1), {pdiv(R + 1)});
        for (long j = 0; j < R; ++j) add(cls(0, 1, -1), {pdiv(j + 1), pdiv(j + 2)});
        add(cls(0, 2, 0), {px, pdiv(1)});
        for (long j = 1; j < R; ++j) add(cls(0, 2, -2), {px, pdiv(j + 1)});
        if (R >= 1) add(odd_tail ? cls(0, 2, -2) : cls(0, 1, -1), {px, pdiv(R + 1)});
        for (long j = 0; j < R; ++j) add(cls(0, 0, 2), {px, pdiv(j + 1), pdiv(j + 2)});
    }
    // excluded tangency points come back as exact point corrections
    for (long i = 0; i < plan.b_count; ++i) D = D + nontransversal_point_series_d3(1);
    for (const auto& res : plan.residuals)
        if (res.nontransversal) D = D + nontransversal_point_series_d3(res.depth);

    return poincare_transform(D, 3);
}

RationalSeries ordered_contact_integral_assembled(long a1, long a2, long c1, long c2, long d,
                                                  const LaurentPoly& cls_free,
                                                  const LaurentPoly& cls_meet) {
    const long ae = a1 + a2 + c1 + c2 - 1;
    RationalSeries free_part = transversal_integral(cls_free, {{{0, ae}, 1}}, d);
    RationalSeries meet_part =
        transversal_integral(cls_meet, {{{0, ae}, 1}, {{0, a1}, c1}}, d);
    return free_part + meet_part;
}

RationalSeries ordered_contact_integral_display(long a1, long a2, long c1, long c2, long d,
                                                const LaurentPoly& cls_free,
                                                const LaurentPoly& cls_meet) {
    const long we = a1 + a2 + c1 + c2;  // exponent of the exceptional weight
    const long wx = a1 + c1;            // exponent of the strict-transform weight
    RationalSeries t1 =
        rs_const((cls_free * Lm1()).shifted(-d - we)).divided_by_factor({-we, 0});
    RationalSeries t2 = rs_const((cls_meet * Lm1() * (L(c1) - C(1))).shifted(-d - we - wx))
                            .divided_by_factor({-we, 0})
                            .divided_by_factor({-wx, 0});
    return t1 + t2;
}

namespace {

RationalSeries floor_half_wing_assembled(const LaurentPoly& cls, long c,
                                         const TransversalPiece& epiece, long d) {
    RationalSeries even = transversal_integral(cls, {epiece, {{0, c + 1}, c}}, d);
    RationalSeries odd = transversal_integral(cls, {epiece}, d) *
                         rs_const((L(c) - C(1)).shifted(-c));
    return even + odd.divided_by_factor({-(2 * c + 1), 0});
}

}  // namespace

RationalSeries floor_half_integral_assembled(long c1, long c2, long d, const LaurentPoly& cls_free,
                                             const LaurentPoly& cls_w1,
                                             const LaurentPoly& cls_w2) {
    const TransversalPiece epiece{{0, c1 + c2}, 1};
    return transversal_integral(cls_free, {epiece}, d) +
           floor_half_wing_assembled(cls_w1, c1, epiece, d) +
           floor_half_wing_assembled(cls_w2, c2, epiece, d);
}

RationalSeries floor_half_integral_display(long c1, long c2, long d, const LaurentPoly& cls_free,
                                           const LaurentPoly& cls_w1, const LaurentPoly& cls_w2) {
    const long we = c1 + c2 + 1;
    auto wing = [](const LaurentPoly& cls, long c) {
        LaurentPoly num = cls * (L(c) - C(1)) *
                          (LaurentPoly::monomial(1, -c) + LaurentPoly::monomial(1, -2 * c - 1));
        return rs_const(num).divided_by_factor({-(2 * c + 1), 0});
    };
    RationalSeries inner = rs_const(cls_free) + wing(cls_w1, c1) + wing(cls_w2, c2);
    return (rs_const(Lm1().shifted(-d - we)) * inner).divided_by_factor({-we, 0});
}

}  // namespace singpoincare
