#include "singpoincare/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace singpoincare {

namespace {

bool den_less(const DenFactor& x, const DenFactor& y) {
    return x.b != y.b ? x.b < y.b : x.a < y.a;
}

void check_factor(const DenFactor& f) {
    if (f.b < 0 || (f.a == 0 && f.b == 0))
        throw std::invalid_argument("denominator factor needs b >= 0 and (a, b) != (0, 0)");
}

// multiply a T-polynomial by (1 - L^a T^b)
std::vector<LaurentPoly> poly_mul_factor(const std::vector<LaurentPoly>& v, const DenFactor& f) {
    if (v.empty()) return {};
    std::vector<LaurentPoly> out(v.size() + f.b);
    for (size_t j = 0; j < v.size(); ++j) {
        out[j] += v[j];
        out[j + f.b] -= v[j].shifted(f.a);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<LaurentPoly> poly_mul_factors(std::vector<LaurentPoly> v,
                                          const std::vector<DenFactor>& fs) {
    for (const auto& f : fs) v = poly_mul_factor(v, f);
    return v;
}

std::vector<LaurentPoly> poly_add(const std::vector<LaurentPoly>& x,
                                  const std::vector<LaurentPoly>& y) {
    std::vector<LaurentPoly> out(std::max(x.size(), y.size()));
    for (size_t j = 0; j < x.size(); ++j) out[j] += x[j];
    for (size_t j = 0; j < y.size(); ++j) out[j] += y[j];
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<LaurentPoly> poly_mul(const std::vector<LaurentPoly>& x,
                                  const std::vector<LaurentPoly>& y) {
    if (x.empty() || y.empty()) return {};
    std::vector<LaurentPoly> out(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

using FactorCounts = std::map<std::pair<long, long>, long>;

FactorCounts count_factors(const std::vector<DenFactor>& fs) {
    FactorCounts m;
    for (const auto& f : fs) ++m[{f.b, f.a}];
    return m;
}

std::vector<DenFactor> counts_to_sorted(const FactorCounts& m) {
    std::vector<DenFactor> out;
    for (const auto& [key, n] : m)
        for (long i = 0; i < n; ++i) out.push_back({key.second, key.first});
    return out;
}

}  // namespace

RationalSeries::RationalSeries(LaurentPoly c) {
    if (!c.is_zero()) num_.push_back(std::move(c));
}

RationalSeries::RationalSeries(std::vector<LaurentPoly> num, std::vector<DenFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (const auto& f : den_) check_factor(f);
    normalize();
}

RationalSeries RationalSeries::monomial(LaurentPoly c, long tdeg) {
    if (tdeg < 0) throw std::invalid_argument("negative T-degree");
    std::vector<LaurentPoly> num(tdeg + 1);
    num[tdeg] = std::move(c);
    return RationalSeries(std::move(num), {});
}

void RationalSeries::normalize() {
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    if (num_.empty()) {
        den_.clear();
        return;
    }
    std::sort(den_.begin(), den_.end(), den_less);
}

RationalSeries RationalSeries::divided_by_factor(DenFactor f) const {
    check_factor(f);
    if (is_zero()) return *this;
    RationalSeries r = *this;
    r.den_.push_back(f);
    r.normalize();
    return r;
}

RationalSeries operator+(const RationalSeries& x, const RationalSeries& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    // common denominator: per-factor maximum multiplicity
    FactorCounts cx = count_factors(x.den_), cy = count_factors(y.den_), cu = cx;
    for (const auto& [key, n] : cy) cu[key] = std::max(cu[key], n);
    std::vector<DenFactor> extra_x, extra_y;
    for (const auto& [key, n] : cu) {
        long nx = 0, ny = 0;
        if (auto it = cx.find(key); it != cx.end()) nx = it->second;
        if (auto it = cy.find(key); it != cy.end()) ny = it->second;
        for (long i = 0; i < n - nx; ++i) extra_x.push_back({key.second, key.first});
        for (long i = 0; i < n - ny; ++i) extra_y.push_back({key.second, key.first});
    }
    std::vector<LaurentPoly> num =
        poly_add(poly_mul_factors(x.num_, extra_x), poly_mul_factors(y.num_, extra_y));
    return RationalSeries(std::move(num), counts_to_sorted(cu));
}

RationalSeries operator-(const RationalSeries& x, const RationalSeries& y) {
    return x + RationalSeries(LaurentPoly(-1)) * y;
}

RationalSeries operator*(const RationalSeries& x, const RationalSeries& y) {
    if (x.is_zero() || y.is_zero()) return RationalSeries();
    std::vector<DenFactor> den = x.den_;
    den.insert(den.end(), y.den_.begin(), y.den_.end());
    return RationalSeries(poly_mul(x.num_, y.num_), std::move(den));
}

bool RationalSeries::operator==(const RationalSeries& o) const {
    // num_x * den_y == num_y * den_x, with the shared factors cancelled first
    FactorCounts cx = count_factors(den_), cy = count_factors(o.den_);
    std::vector<DenFactor> rx, ry;  // factors unique to each side
    for (const auto& [key, n] : cx) {
        long ny = 0;
        if (auto it = cy.find(key); it != cy.end()) ny = it->second;
        for (long i = 0; i < n - ny; ++i) rx.push_back({key.second, key.first});
    }
    for (const auto& [key, n] : cy) {
        long nx = 0;
        if (auto it = cx.find(key); it != cx.end()) nx = it->second;
        for (long i = 0; i < n - nx; ++i) ry.push_back({key.second, key.first});
    }
    return poly_mul_factors(num_, ry) == poly_mul_factors(o.num_, rx);
}

std::string RationalSeries::str() const {
    std::ostringstream out;
    out << "(";
    if (num_.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (size_t j = 0; j < num_.size(); ++j) {
            if (num_[j].is_zero()) continue;
            if (!first) out << " + ";
            first = false;
            const auto& terms = num_[j].terms();
            const bool bare = terms.size() == 1 && terms.begin()->second > 0;
            std::string coeff = bare ? num_[j].str() : "(" + num_[j].str() + ")";
            out << coeff;
            if (j >= 1) out << "*T^" << j;
        }
    }
    out << ") / (";
    if (den_.empty()) {
        out << "1";
    } else {
        bool first = true;
        for (const auto& f : den_) {
            if (!first) out << "*";
            first = false;
            out << "(1 - ";
            if (f.a != 0) {
                out << (f.a == 1 ? "L" : "L^" + std::to_string(f.a));
                if (f.b != 0) out << "*";
            }
            if (f.b != 0) out << "T^" << f.b;
            out << ")";
        }
    }
    out << ")";
    return out.str();
}

std::string RationalSeries::json() const {
    std::ostringstream out;
    out << "{\"num\":[";
    for (size_t j = 0; j < num_.size(); ++j) {
        if (j) out << ",";
        out << num_[j].json();
    }
    out << "],\"den\":[";
    for (size_t j = 0; j < den_.size(); ++j) {
        if (j) out << ",";
        out << "[" << den_[j].a << "," << den_[j].b << "]";
    }
    out << "]}";
    return out.str();
}

std::vector<LaurentPoly> rs_expand(const RationalSeries& x, long order) {
    if (order < 0) throw std::invalid_argument("negative expansion order");
    std::vector<LaurentPoly> out(order + 1);
    for (size_t j = 0; j < x.num().size() && j <= size_t(order); ++j) out[j] = x.num()[j];
    for (const auto& f : x.den()) {
        if (f.b == 0)
            throw std::domain_error("series with a T-free denominator factor is not expandable");
        // in place: S = in + L^a T^b S
        for (long d = f.b; d <= order; ++d) out[d] += out[d - f.b].shifted(f.a);
    }
    return out;
}

RationalSeries rs_substitute_T_scale(const RationalSeries& x, long k) {
    std::vector<LaurentPoly> num = x.num();
    for (size_t j = 0; j < num.size(); ++j) num[j] = num[j].shifted(k * long(j));
    std::vector<DenFactor> den = x.den();
    for (auto& f : den) f.a += k * f.b;
    return RationalSeries(std::move(num), std::move(den));
}

std::vector<Rat> rs_specialize_L(const RationalSeries& x, const Rat& q, long order) {
    std::vector<LaurentPoly> coeffs = rs_expand(x, order);
    std::vector<Rat> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.eval(q));
    return out;
}

}  // namespace singpoincare
