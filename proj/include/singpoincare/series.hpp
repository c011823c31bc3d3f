#pragma once

#include <string>
#include <vector>

#include "singpoincare/laurent.hpp"

namespace singpoincare {

// One denominator factor (1 - L^a T^b).
// Invariant: b >= 0 and (a, b) != (0, 0). Factors with b = 0 are legal ring
// elements (they arise from weight components with no T-grading) but block
// T-expansion; rs_expand and rs_specialize_L reject them.
struct DenFactor {
    long a = 0;
    long b = 0;
    bool operator==(const DenFactor&) const = default;
};

// Rational series NUM / prod (1 - L^a T^b): numerator a polynomial in T with
// Laurent coefficients (ascending T-degree, trailing zeros trimmed), denominator
// a multiset of factors kept sorted by (b, a). No cancellation is performed;
// equality is tested by cross-multiplication.
class RationalSeries {
public:
    RationalSeries() = default;
    explicit RationalSeries(LaurentPoly c);
    RationalSeries(std::vector<LaurentPoly> num, std::vector<DenFactor> den);

    static RationalSeries monomial(LaurentPoly c, long tdeg);

    const std::vector<LaurentPoly>& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    // appends a factor 1 / (1 - L^a T^b)
    RationalSeries divided_by_factor(DenFactor f) const;

    friend RationalSeries operator+(const RationalSeries& x, const RationalSeries& y);
    friend RationalSeries operator-(const RationalSeries& x, const RationalSeries& y);
    friend RationalSeries operator*(const RationalSeries& x, const RationalSeries& y);

    bool operator==(const RationalSeries& o) const;
    bool operator!=(const RationalSeries& o) const { return !(*this == o); }

    std::string str() const;
    std::string json() const;

private:
    std::vector<LaurentPoly> num_;
    std::vector<DenFactor> den_;
    void normalize();
};

// coefficients of T^0 .. T^order of the series expansion; rejects b = 0 factors
std::vector<LaurentPoly> rs_expand(const RationalSeries& x, long order);

// substitute T -> L^k T
RationalSeries rs_substitute_T_scale(const RationalSeries& x, long k);

// expand to the given order and evaluate L = q
std::vector<Rat> rs_specialize_L(const RationalSeries& x, const Rat& q, long order);

}  // namespace singpoincare
