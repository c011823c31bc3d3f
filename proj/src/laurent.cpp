#include "singpoincare/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace singpoincare {

void LaurentPoly::add_term(long e, Int c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::monomial(Int c, long e) {
    LaurentPoly p;
    p.add_term(e, std::move(c));
    return p;
}

Int LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

Rat LaurentPoly::eval(const Rat& q) const {
    if (q == 0) throw std::invalid_argument("eval at 0 undefined for Laurent polynomials");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat pw = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) pw *= q;
        if (e < 0) pw = 1 / pw;
        acc += Rat(c) * pw;
    }
    acc.canonicalize();
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // exponent-descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const long e = it->first;
        const Int& c = it->second;
        const bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Int mag = neg ? Int(-c) : c;
        if (e == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            if (e == 1)
                out << "L";
            else
                out << "L^" << e;
        }
    }
    return out.str();
}

std::string LaurentPoly::json() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << ",";
        first = false;
        // coefficients that do not fit a 64-bit signed integer are emitted as strings
        if (it->second.fits_slong_p())
            out << "[" << it->first << "," << it->second.get_str() << "]";
        else
            out << "[" << it->first << ",\"" << it->second.get_str() << "\"]";
    }
    out << "]";
    return out.str();
}

bool is_in_ZL(const LaurentPoly& p) {
    return p.is_zero() || p.min_exp() >= 0;
}

LaurentPoly projective_class(long t) {
    if (t < 0) throw std::invalid_argument("projective_class needs t >= 0");
    LaurentPoly p;
    for (long e = 0; e <= t; ++e) p += LaurentPoly::monomial(1, e);
    return p;
}

}  // namespace singpoincare
