#ifndef GERM_PARAM_HPP
#define GERM_PARAM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "germ/poly.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Moduli parameter a(i,j), named after the monomial it multiplies.
struct PVar {
    long i = 0, j = 0;
    friend bool operator==(const PVar& a, const PVar& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const PVar& a, const PVar& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    std::string str() const {
        return "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

/// Exponent vector of a parameter monomial (sparse, ordered).
using PExp = std::map<PVar, int>;

inline int pexp_deg(const PExp& e) {
    int d = 0;
    for (auto& [v, k] : e) d += k;
    return d;
}

/// graded lex over PVar order; multiplication-compatible
struct PExpLess {
    bool operator()(const PExp& a, const PExp& b) const {
        int da = pexp_deg(a), db = pexp_deg(b);
        if (da != db) return da < db;
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first < ib->first) return false;  // a has the earlier var => a larger
            if (ib->first < ia->first) return true;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        }
        return ia == a.end() && ib != b.end() ? true : false;
    }
};

/// Polynomial in the moduli parameters over Q (coefficient domain of
/// normal-form families).
class ParamPoly {
  public:
    using Terms = std::map<PExp, Rat, PExpLess>;

    ParamPoly() = default;
    ParamPoly(long n) { if (n != 0) t_[{}] = Rat(n); }
    ParamPoly(const Rat& r) { if (!r.is_zero()) t_[{}] = r; }
    static ParamPoly variable(const PVar& v) {
        ParamPoly p;
        p.t_[PExp{{v, 1}}] = Rat(1);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Rat constant_value() const {
        if (t_.empty()) return Rat();
        if (!is_constant()) throw std::domain_error("ParamPoly: not constant");
        return t_.begin()->second;
    }
    int total_deg() const {
        int d = 0;
        for (auto& [e, c] : t_) d = std::max(d, pexp_deg(e));
        return d;
    }

    void add_term(const PExp& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly operator-() const {
        ParamPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                PExp e = ea;
                for (const auto& [v, k] : eb) e[v] += k;
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// exact division; throws if g does not divide
    friend ParamPoly exact_div(const ParamPoly& f, const ParamPoly& g) {
        if (g.is_zero()) throw std::domain_error("ParamPoly: division by zero");
        ParamPoly rem = f, quo;
        const auto& glead = *g.t_.rbegin();
        while (!rem.is_zero()) {
            const auto& rlead = *rem.t_.rbegin();
            // divisibility of exponent vectors
            PExp q = rlead.first;
            bool ok = true;
            for (const auto& [v, k] : glead.first) {
                auto it = q.find(v);
                if (it == q.end() || it->second < k) {
                    ok = false;
                    break;
                }
                it->second -= k;
                if (it->second == 0) q.erase(it);
            }
            if (!ok) throw std::domain_error("ParamPoly: inexact division");
            Rat c = rlead.second / glead.second;
            ParamPoly qt;
            qt.t_[q] = c;
            quo = quo + qt;
            rem = rem - qt * g;
        }
        return quo;
    }

    friend bool divides(const ParamPoly& g, const ParamPoly& f, ParamPoly* quo_out) {
        try {
            ParamPoly q = exact_div(f, g);
            if (quo_out) *quo_out = q;
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }

    /// rational content (gcd of coefficients, sign of the leading term)
    Rat content() const {
        if (t_.empty()) return Rat();
        Int num = 0, den = 1;
        for (const auto& [e, c] : t_) {
            num = gcd(num, c.num());
            den = lcm(den, c.den());
        }
        Rat r = Rat(num, den);
        if (t_.rbegin()->second.sign() < 0) r = -r;
        return r;
    }
    ParamPoly primitive() const {
        if (t_.empty()) return *this;
        Rat c = content();
        ParamPoly r = *this;
        for (auto& [e, cc] : r.t_) cc /= c;
        return r;
    }

    Rat evaluate(const std::map<PVar, Rat>& point) const {
        Rat acc;
        for (const auto& [e, c] : t_) {
            Rat t = c;
            for (const auto& [v, k] : e) {
                auto it = point.find(v);
                if (it == point.end()) throw std::domain_error("ParamPoly: unbound parameter");
                for (int q = 0; q < k; ++q) t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    std::vector<PVar> variables() const {
        std::vector<PVar> vs;
        for (const auto& [e, c] : t_)
            for (const auto& [v, k] : e)
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        // print ascending in the term order; constants first
        for (const auto& [e, c] : t_) {
            std::string mono;
            for (const auto& [v, k] : e) {
                if (!mono.empty()) mono += "*";
                mono += v.str();
                if (k > 1) mono += "^" + std::to_string(k);
            }
            std::string cs = c.str();
            bool neg = cs[0] == '-';
            std::string abs = neg ? cs.substr(1) : cs;
            std::string body;
            if (mono.empty())
                body = abs;
            else if (abs == "1")
                body = mono;
            else
                body = abs + "*" + mono;
            if (out.empty())
                out = neg ? "-" + body : body;
            else
                out += neg ? "-" + body : "+" + body;
        }
        return out;
    }

  private:
    Terms t_;
};

template <>
inline std::string coeff_str<ParamPoly>(const ParamPoly& c) { return c.str(); }

using PPoly = BiPoly<ParamPoly>;

inline PPoly to_param_poly(const QPoly& f) {
    PPoly r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, ParamPoly(c));
    return r;
}

inline QPoly specialize(const PPoly& f, const std::map<PVar, Rat>& point) {
    QPoly r;
    for (const auto& [m, c] : f.terms()) r.add_term(m, c.evaluate(point));
    return r;
}

}  // namespace germ

#endif
