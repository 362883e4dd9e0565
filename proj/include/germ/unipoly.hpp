#ifndef GERM_UNIPOLY_HPP
#define GERM_UNIPOLY_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

/// Dense univariate polynomial over a field type C (needs +,-,*,/ ,is_zero).
/// Coefficient vector never ends in a zero; the zero polynomial is empty.
template <class C>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<C> cs) : c_(std::move(cs)) { trim(); }
    static UniPoly constant(const C& c) { return UniPoly(std::vector<C>{c}); }
    /// c * t^k
    static UniPoly term(const C& c, int k) {
        std::vector<C> v(k + 1);
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return (int)c_.size() - 1; }  // -1 for zero
    const C& operator[](int i) const { return c_[i]; }
    const C& lc() const { return c_.back(); }
    const std::vector<C>& coeffs() const { return c_; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly operator-() const {
        std::vector<C> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const C& s) const {
        std::vector<C> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return UniPoly(std::move(r));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<C> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(long(i));
        return UniPoly(std::move(r));
    }

    C eval(const C& x) const {
        C acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// f(t + s) for a scalar shift s.
    UniPoly shifted(const C& s) const {
        UniPoly res, pw = constant(C(1L));
        UniPoly base(std::vector<C>{s, C(1L)});
        for (size_t i = 0; i < c_.size(); ++i) {
            res = res + pw.scaled(c_[i]);
            if (i + 1 < c_.size()) pw = pw * base;
        }
        return res;
    }

    /// f(g(t))
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(C(1L) / lc());
    }

    /// Division with remainder; divisor must have invertible leading coefficient.
    friend std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
        std::vector<C> rem = a.c_;
        int db = b.deg();
        C binv = C(1L) / b.lc();
        if ((int)rem.size() - 1 < db) return {UniPoly(), a};
        std::vector<C> q((int)rem.size() - db, C{});
        for (int i = (int)rem.size() - 1; i >= db; --i) {
            if (rem[i].is_zero()) continue;
            C f = rem[i] * binv;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.c_[j];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    std::string str(const std::string& var, std::string (*coeff_str)(const C&)) const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += "+";
            out += coeff_str(c_[i]);
            if (i >= 1) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<C> c_;
};

template <class C>
UniPoly<C> poly_mod(const UniPoly<C>& a, const UniPoly<C>& b) {
    return divrem(a, b).second;
}

/// Monic gcd over a field.
template <class C>
UniPoly<C> poly_gcd(UniPoly<C> a, UniPoly<C> b) {
    while (!b.is_zero()) {
        UniPoly<C> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
template <class C>
std::tuple<UniPoly<C>, UniPoly<C>, UniPoly<C>> poly_xgcd(UniPoly<C> a, UniPoly<C> b) {
    UniPoly<C> s0 = UniPoly<C>::constant(C(1L)), s1;
    UniPoly<C> t0, t1 = UniPoly<C>::constant(C(1L));
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
        UniPoly<C> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    C f = C(1L) / a.lc();
    return {a.scaled(f), s0.scaled(f), t0.scaled(f)};
}

/// Yun squarefree decomposition in characteristic 0:
/// returns [(g_1,1),(g_2,2),...] with f = unit * prod g_i^i, g_i squarefree
/// pairwise coprime (trivial parts omitted).
template <class C>
std::vector<std::pair<UniPoly<C>, int>> squarefree_decomposition(const UniPoly<C>& f) {
    std::vector<std::pair<UniPoly<C>, int>> out;
    if (f.deg() <= 0) return out;
    UniPoly<C> a = f.monic();
    UniPoly<C> g = poly_gcd(a, a.derivative());
    UniPoly<C> w = divrem(a, g).first;
    int i = 1;
    while (w.deg() > 0) {
        UniPoly<C> y = poly_gcd(w, g);
        UniPoly<C> part = divrem(w, y).first;
        if (part.deg() > 0) out.emplace_back(part, i);
        g = divrem(g, y).first;
        w = std::move(y);
        ++i;
    }
    return out;
}

template <class C>
bool is_squarefree(const UniPoly<C>& f) {
    if (f.deg() <= 1) return true;
    return poly_gcd(f, f.derivative()).deg() == 0;
}

/// Resultant of two polynomials over a field, by the Euclidean remainder
/// sequence with the standard degree/leading-coefficient corrections.
template <class C>
C field_resultant(UniPoly<C> a, UniPoly<C> b) {
    if (a.is_zero() || b.is_zero()) return C{};
    C res = C(1L);
    if (a.deg() < b.deg()) {
        if ((a.deg() & 1) && (b.deg() & 1)) res = -res;
        std::swap(a, b);
    }
    while (true) {
        if (b.deg() == 0) {
            C lb = b.lc(), acc = C(1L);
            for (int i = 0; i < a.deg(); ++i) acc = acc * lb;
            return res * acc;
        }
        UniPoly<C> r = poly_mod(a, b);
        if (r.is_zero()) return C{};
        // res(a,b) = (-1)^(deg a * deg b) * lc(b)^(deg a - deg r) * res(b,r)
        C lb = b.lc(), acc = C(1L);
        for (int i = 0; i < a.deg() - r.deg(); ++i) acc = acc * lb;
        if ((a.deg() & 1) && (b.deg() & 1)) acc = -acc;
        res = res * acc;
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace germ

#endif
