#ifndef GERM_POLY_HPP
#define GERM_POLY_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "germ/rational.hpp"
#include "germ/tower.hpp"

namespace germ {

/// Monomial x^i y^j.
struct Mon {
    long i = 0, j = 0;
    long deg() const { return i + j; }
    friend bool operator==(const Mon& a, const Mon& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator!=(const Mon& a, const Mon& b) { return !(a == b); }
    friend Mon operator*(const Mon& a, const Mon& b) { return {a.i + b.i, a.j + b.j}; }
    bool divides(const Mon& m) const { return i <= m.i && j <= m.j; }
    Mon quotient(const Mon& m) const { return {i - m.i, j - m.j}; }
    std::string str() const;
};

/// Storage and display order: ascending total degree, then descending
/// x-exponent (graded lex with x > y, read smallest-first).
struct MonLess {
    bool operator()(const Mon& a, const Mon& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.i > b.i;
    }
};

/// Single weight (wx, wy), both positive.
struct Weight {
    long wx = 1, wy = 1;
    long deg(const Mon& m) const { return wx * m.i + wy * m.j; }
    friend bool operator==(const Weight& a, const Weight& b) {
        return a.wx == b.wx && a.wy == b.wy;
    }
};

/// Facet weights scaled by the minimal multipliers that level the whole
/// boundary at one degree d.
struct PiecewiseWeight {
    std::vector<std::pair<Weight, long>> scaled;  // (w_i, lambda_i)
    long d = 0;
    long deg(const Mon& m) const {
        long best = 0;
        bool first = true;
        for (const auto& [w, lam] : scaled) {
            long v = lam * w.deg(m);
            if (first || v < best) best = v, first = false;
        }
        return best;
    }
};

template <class C>
std::string coeff_str(const C& c);
template <>
inline std::string coeff_str<Rat>(const Rat& c) { return c.str(); }
template <>
inline std::string coeff_str<AlgNum>(const AlgNum& c) { return c.str(); }

/// Sparse exact bivariate polynomial over coefficient ring C.
template <class C>
class BiPoly {
  public:
    using Terms = std::map<Mon, C, MonLess>;

    BiPoly() = default;
    static BiPoly term(const C& c, Mon m) {
        BiPoly p;
        if (!c.is_zero()) p.t_[m] = c;
        return p;
    }
    static BiPoly constant(const C& c) { return term(c, {0, 0}); }
    static BiPoly var_x() { return term(C(1L), {1, 0}); }
    static BiPoly var_y() { return term(C(1L), {0, 1}); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(const Mon& m, const C& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    C coeff(const Mon& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C{} : it->second;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    BiPoly scaled(const C& s) const {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : t_) r.add_term(m, c * s);
        return r;
    }
    BiPoly mul_mon(const Mon& m) const {
        BiPoly r;
        for (const auto& [mm, c] : t_) r.t_[mm * m] = c;
        return r;
    }

    BiPoly dx() const {
        BiPoly r;
        for (const auto& [m, c] : t_)
            if (m.i > 0) r.add_term({m.i - 1, m.j}, c * C(m.i));
        return r;
    }
    BiPoly dy() const {
        BiPoly r;
        for (const auto& [m, c] : t_)
            if (m.j > 0) r.add_term({m.i, m.j - 1}, c * C(m.j));
        return r;
    }

    /// minimal total degree of a term (order of the germ); -1 for zero
    long ord() const {
        long r = -1;
        for (const auto& [m, c] : t_)
            if (r < 0 || m.deg() < r) r = m.deg();
        return r;
    }
    long deg() const {
        long r = -1;
        for (const auto& [m, c] : t_) r = std::max(r, m.deg());
        return r;
    }

    std::vector<Mon> support() const {
        std::vector<Mon> s;
        s.reserve(t_.size());
        for (const auto& [m, c] : t_) s.push_back(m);
        return s;
    }

    bool divisible_by_x() const {
        for (const auto& [m, c] : t_)
            if (m.i == 0) return false;
        return !t_.empty();
    }
    bool divisible_by_y() const {
        for (const auto& [m, c] : t_)
            if (m.j == 0) return false;
        return !t_.empty();
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : t_) {
            std::string cs = coeff_str<C>(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                       cs.find('-', 1) == std::string::npos;
            std::string body;
            std::string abs = neg ? cs.substr(1) : cs;
            bool needs_paren = cs.find('+', 1) != std::string::npos ||
                               cs.find('-', 1) != std::string::npos;
            if (m.deg() == 0) {
                body = needs_paren ? "(" + cs + ")" : (neg ? abs : cs);
                if (neg && !needs_paren) body = abs;
            } else if (abs == "1" && !needs_paren) {
                body = m.str();
            } else {
                body = (needs_paren ? "(" + cs + ")" : abs) + "*" + m.str();
            }
            if (out.empty()) {
                out = (neg && !needs_paren) ? "-" + body : body;
            } else {
                out += (neg && !needs_paren) ? "-" + body : "+" + body;
            }
        }
        return out;
    }

  private:
    Terms t_;
};

using QPoly = BiPoly<Rat>;
using KPoly = BiPoly<AlgNum>;

inline std::string Mon_str_impl(long i, long j) {
    std::string s;
    if (i > 0) {
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
    }
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (j > 1) s += "^" + std::to_string(j);
    }
    if (s.empty()) s = "1";
    return s;
}
inline std::string Mon::str() const { return Mon_str_impl(i, j); }

// ----------------------------------------------------------- w-degrees/jets

inline long w_deg(const Mon& m, const Weight& w) { return w.deg(m); }
inline long w_deg(const Mon& m, const PiecewiseWeight& w) { return w.deg(m); }

/// terms of w-degree <= j (spec: weighted j-jet)
template <class C, class W>
BiPoly<C> w_jet(const BiPoly<C>& f, const W& w, long j) {
    BiPoly<C> r;
    for (const auto& [m, c] : f.terms())
        if (w_deg(m, w) <= j) r.add_term(m, c);
    return r;
}

/// standard jet: total degree <= j
template <class C>
BiPoly<C> jet(const BiPoly<C>& f, long j) {
    return w_jet(f, Weight{1, 1}, j);
}

/// terms of w-degree exactly d
template <class C, class W>
BiPoly<C> w_slice(const BiPoly<C>& f, const W& w, long d) {
    BiPoly<C> r;
    for (const auto& [m, c] : f.terms())
        if (w_deg(m, w) == d) r.add_term(m, c);
    return r;
}

/// f = g * x^n * y^m with n, m maximal; returns (g, n, m)
template <class C>
std::tuple<BiPoly<C>, long, long> saturate(const BiPoly<C>& f) {
    if (f.is_zero()) throw std::domain_error("saturate: zero polynomial");
    long n = -1, m = -1;
    for (const auto& [mon, c] : f.terms()) {
        n = n < 0 ? mon.i : std::min(n, mon.i);
        m = m < 0 ? mon.j : std::min(m, mon.j);
    }
    BiPoly<C> g;
    for (const auto& [mon, c] : f.terms()) g.add_term({mon.i - n, mon.j - m}, c);
    return {g, n, m};
}

/// saturation by one variable only
template <class C>
std::pair<BiPoly<C>, long> saturate_x(const BiPoly<C>& f) {
    auto [g, n, m] = saturate(f);
    return {g.mul_mon({0, m}), n};
}
template <class C>
std::pair<BiPoly<C>, long> saturate_y(const BiPoly<C>& f) {
    auto [g, n, m] = saturate(f);
    return {g.mul_mon({n, 0}), m};
}

// ------------------------------------------------------------- substitution

/// Raw composition f(px, py), optionally truncating all terms of total
/// degree > trunc (trunc < 0 keeps everything).
template <class C>
BiPoly<C> compose(const BiPoly<C>& f, const BiPoly<C>& px, const BiPoly<C>& py,
                  long trunc = -1) {
    auto cut = [&](const BiPoly<C>& p) { return trunc < 0 ? p : jet(p, trunc); };
    long maxi = 0, maxj = 0;
    for (const auto& [m, c] : f.terms()) {
        maxi = std::max(maxi, m.i);
        maxj = std::max(maxj, m.j);
    }
    std::vector<BiPoly<C>> xp(maxi + 1), yp(maxj + 1);
    xp[0] = BiPoly<C>::constant(C(1L));
    yp[0] = xp[0];
    for (long i = 1; i <= maxi; ++i) xp[i] = cut(xp[i - 1] * px);
    for (long j = 1; j <= maxj; ++j) yp[j] = cut(yp[j - 1] * py);
    BiPoly<C> r;
    for (const auto& [m, c] : f.terms()) r = r + cut(xp[m.i] * yp[m.j]).scaled(c);
    return r;
}

/// poly-core op substitute: checked local-automorphism composition.
/// Images must have zero constant term and linearly independent linear parts.
template <class C>
BiPoly<C> substitute(const BiPoly<C>& f, const BiPoly<C>& px, const BiPoly<C>& py) {
    if (!px.coeff({0, 0}).is_zero() || !py.coeff({0, 0}).is_zero())
        throw std::domain_error("substitute: images must vanish at the origin");
    C a = px.coeff({1, 0}), b = px.coeff({0, 1});
    C c = py.coeff({1, 0}), d = py.coeff({0, 1});
    C det = a * d - b * c;
    if (det.is_zero())
        throw std::domain_error("substitute: images do not define a local automorphism");
    return compose(f, px, py);
}

/// swap x and y
template <class C>
BiPoly<C> mirror(const BiPoly<C>& f) {
    BiPoly<C> r;
    for (const auto& [m, c] : f.terms()) r.add_term({m.j, m.i}, c);
    return r;
}

template <class C>
C evaluate(const BiPoly<C>& f, const C& x, const C& y) {
    // plain monomial evaluation; fine at desk scale
    C acc{};
    for (const auto& [m, c] : f.terms()) {
        C t = c;
        for (long k = 0; k < m.i; ++k) t = t * x;
        for (long k = 0; k < m.j; ++k) t = t * y;
        acc = acc + t;
    }
    return acc;
}

// ------------------------------------------------------------- conversions

inline KPoly lift_poly(const QPoly& f, const TowerPtr& t = nullptr) {
    KPoly r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, AlgNum::from_rational(c, t));
    return r;
}

inline KPoly lift_poly(const KPoly& f, const TowerPtr& t) {
    KPoly r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, c.lifted_to(t));
    return r;
}

inline bool is_rational_poly(const KPoly& f) {
    for (const auto& [m, c] : f.terms())
        if (!c.is_rational()) return false;
    return true;
}

inline QPoly to_rational_poly(const KPoly& f) {
    QPoly r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, c.rational_value());
    return r;
}

/// common tower of all coefficients of several polynomials
inline TowerPtr poly_tower(const KPoly& f, TowerPtr t = nullptr) {
    for (const auto& [m, c] : f.terms()) t = Tower::common(t, c.tower());
    return t;
}

}  // namespace germ

#endif
