#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace singpoincare {

using Int = mpz_class;
using Rat = mpq_class;

// Laurent polynomial in the Lefschetz class L with integer coefficients.
// Invariant: no explicit zero coefficients; the zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { add_term(0, Int(c)); }
    LaurentPoly(Int c) { add_term(0, std::move(c)); }

    static LaurentPoly monomial(Int c, long e);
    static LaurentPoly monomial(long c, long e) { return monomial(Int(c), e); }
    static LaurentPoly lefschetz(long e = 1) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Int>& terms() const { return terms_; }
    Int coeff(long e) const;

    long min_exp() const;  // requires a nonzero polynomial
    long max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly shifted(long k) const;  // multiply by L^k

    Rat eval(const Rat& q) const;  // substitute L = q, q != 0

    std::string str() const;
    std::string json() const;  // [[e, c], ...], exponent-descending

private:
    std::map<long, Int> terms_;
    void add_term(long e, Int c);
    friend class RationalSeries;
};

// true when no negative power of L occurs
bool is_in_ZL(const LaurentPoly& p);

// class of projective t-space, 1 + L + ... + L^t
LaurentPoly projective_class(long t);

}  // namespace singpoincare
