#pragma once

#include <vector>

#include "singpoincare/series.hpp"
#include "singpoincare/toric.hpp"

namespace singpoincare {

// Weight monomial L^(-sN*s - nu) attached to a divisor: as a series in T = L^(-s)
// it is L^(-nu) T^(sN). Filtration requires sN + nu >= 1.
struct WeightedFactor {
    long sN = 0;
    long nu = 0;
};

// One divisor through a stratum: alpha is its weight before the codimension
// shift, c the local codimension it accounts for. The integral multiplies
// (L^c - 1) W / (1 - W) with W = alpha shifted by nu += c.
struct TransversalPiece {
    WeightedFactor alpha;
    long codim = 0;
};

// Motivic contribution of a stratum with class cls inside a d-dimensional
// ambient space, all incident divisors transversal:
//   cls * L^(-d) * prod_i (L^(c_i) - 1) W_i' / (1 - W_i')
RationalSeries transversal_integral(const LaurentPoly& cls,
                                    const std::vector<TransversalPiece>& pieces, long d);

// Contribution of one depth-e tangency point in a 3-dimensional total space,
// exact closed form (nu1 = 2e+1, nu2 = 2e+2 are the weights of the two jets
// resolving the tangency).
RationalSeries nontransversal_point_series_d3(long e);

// The same point series transported to the T-domain Poincare side:
// -L^3 (series with T -> L^3 T) / (1 - L^3 T), transcribed directly.
RationalSeries nontransversal_contribution_d3(long e);

// What the one-point stratum WOULD contribute if treated as transversal to a
// single divisor of weight (N, nu) = (e, e(t+1)+1) inside dimension t+2.
RationalSeries nontransversal_point_integral(long e, long t);

// Printed replacement term for the even-depth family; equals
// L^(t+2) * nontransversal_point_integral(e, t) (identity-tested).
RationalSeries even_depth_replacement_display(long e, long t);

// Printed replacement term for the simple-tangency family, kept verbatim for
// the documented-discrepancy test: it matches neither the even-depth display
// at e = 1 nor the one-point integral.
RationalSeries pair_replacement_display(long t);

// General-parameter contribution of a depth-m tangency over a base with
// parameter t, transcribed term by term; empty summation ranges drop the
// whole term (relevant at m = 1).
RationalSeries nontransversal_contribution_general(long m, long t);

// Geometric Poincare transform: P(T) = (1 - L^d D(L^d T)) / (1 - L^d T)
// where D is the motivic series of the d-dimensional family.
RationalSeries poincare_transform(const RationalSeries& D, long d);

// Closed form of the geometric Poincare series of the (p, q) surface, summed
// over the entries of c = hj(q, p).
RationalSeries pgeom_toric_closed(const ToricSurface& ts);

// Independent stratified assembly for t = 1 (p = 1): sums transversal strata
// of the resolved family plus nontransversal point corrections, then applies
// the Poincare transform. Requires ts.t == 1.
RationalSeries pgeom_toric_stratified_t1(const ToricSurface& ts);

// Worked blow-up fixtures, each assembled twice: compositionally from
// transversal_integral and as the printed one-line display.
RationalSeries ordered_contact_integral_assembled(long a1, long a2, long c1, long c2, long d,
                                                  const LaurentPoly& cls_free,
                                                  const LaurentPoly& cls_meet);
RationalSeries ordered_contact_integral_display(long a1, long a2, long c1, long c2, long d,
                                                const LaurentPoly& cls_free,
                                                const LaurentPoly& cls_meet);
RationalSeries floor_half_integral_assembled(long c1, long c2, long d, const LaurentPoly& cls_free,
                                             const LaurentPoly& cls_w1,
                                             const LaurentPoly& cls_w2);
RationalSeries floor_half_integral_display(long c1, long c2, long d, const LaurentPoly& cls_free,
                                           const LaurentPoly& cls_w1, const LaurentPoly& cls_w2);

}  // namespace singpoincare
