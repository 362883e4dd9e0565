#ifndef GERM_LOCALALG_HPP
#define GERM_LOCALALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "germ/poly.hpp"

namespace germ {

// Local ordering: negative degree refined by lex with x > y. Smaller total
// degree means larger monomial; 1 is the largest monomial of all. The
// storage order of BiPoly puts the lead term first.

template <class C>
struct LeadTerm {
    Mon m;
    C c;
};

template <class C>
LeadTerm<C> lead(const BiPoly<C>& f) {
    if (f.is_zero()) throw std::domain_error("lead: zero polynomial");
    auto it = f.terms().begin();
    return {it->first, it->second};
}

/// ecart = deg(f) - deg(LM(f)); 0 for (quasi)homogeneous tails
template <class C>
long ecart(const BiPoly<C>& f) {
    return f.deg() - lead(f).m.deg();
}

/// Mora weak normal form with ecart-minimal selection, first match in
/// generator order. Returns h with u*f = h mod <G> for some unit u;
/// h == 0 iff f lies in the ideal generated by G in the local ring.
template <class C>
BiPoly<C> mora_weak_nf(BiPoly<C> h, const std::vector<BiPoly<C>>& G) {
    std::vector<BiPoly<C>> T = G;
    while (!h.is_zero()) {
        LeadTerm<C> lh = lead(h);
        int best = -1;
        long best_ecart = 0;
        for (size_t k = 0; k < T.size(); ++k) {
            if (!lead(T[k]).m.divides(lh.m)) continue;
            long e = ecart(T[k]);
            if (best < 0 || e < best_ecart) {
                best = (int)k;
                best_ecart = e;
            }
        }
        if (best < 0) return h;
        if (best_ecart > ecart(h)) T.push_back(h);
        const BiPoly<C>& g = T[best];
        LeadTerm<C> lg = lead(g);
        C factor = lh.c / lg.c;
        h = h - g.mul_mon(lh.m.quotient(lg.m)).scaled(factor);
    }
    return h;
}

template <class C>
class StandardBasis {
  public:
    explicit StandardBasis(std::vector<BiPoly<C>> gens) : g_(std::move(gens)) {
        for (const auto& g : g_) leads_.push_back(lead(g).m);
    }
    const std::vector<BiPoly<C>>& generators() const { return g_; }
    const std::vector<Mon>& lead_monomials() const { return leads_; }

    bool lead_divides(const Mon& m) const {
        for (const auto& l : leads_)
            if (l.divides(m)) return true;
        return false;
    }

    /// least A with x^A in the lead ideal; nullopt if none
    std::optional<long> pure_x_power() const {
        std::optional<long> best;
        for (const auto& l : leads_)
            if (l.j == 0 && (!best || l.i < *best)) best = l.i;
        return best;
    }
    std::optional<long> pure_y_power() const {
        std::optional<long> best;
        for (const auto& l : leads_)
            if (l.i == 0 && (!best || l.j < *best)) best = l.j;
        return best;
    }

    /// zero-dimensional lead ideal (finite quotient)
    bool zero_dimensional() const { return pure_x_power() && pure_y_power(); }

  private:
    std::vector<BiPoly<C>> g_;
    std::vector<Mon> leads_;
};

// Standard bases via Lazard's method: homogenize with a slack variable t,
// run homogeneous Buchberger under deglex(t > x > y), set t = 1. On
// homogeneous polynomials that global order restricts to the local order
// (smaller total x,y-degree first, ties lex x > y), so the dehomogenized
// lead terms are the local lead terms.
namespace lazard {

struct TriMon {
    long a = 0, i = 0, j = 0;  // t^a x^i y^j
    long deg() const { return a + i + j; }
    friend bool operator==(const TriMon& p, const TriMon& q) {
        return p.a == q.a && p.i == q.i && p.j == q.j;
    }
    bool divides(const TriMon& m) const { return a <= m.a && i <= m.i && j <= m.j; }
    TriMon quotient(const TriMon& m) const { return {a - m.a, i - m.i, j - m.j}; }
    TriMon mul(const TriMon& m) const { return {a + m.a, i + m.i, j + m.j}; }
};

/// map comparator putting the deglex(t>x>y)-largest monomial first
struct TriGreater {
    bool operator()(const TriMon& p, const TriMon& q) const {
        if (p.deg() != q.deg()) return p.deg() > q.deg();
        if (p.a != q.a) return p.a > q.a;
        if (p.i != q.i) return p.i > q.i;
        return p.j > q.j;
    }
};

template <class C>
using HPoly = std::map<TriMon, C, TriGreater>;

template <class C>
void hp_add(HPoly<C>& f, const TriMon& m, const C& c, long xy_bound = -1) {
    if (c.is_zero()) return;
    if (xy_bound >= 0 && m.i + m.j >= xy_bound) return;  // inside m^bound, hence in the ideal
    auto it = f.find(m);
    if (it == f.end()) {
        f.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) f.erase(it);
    }
}

template <class C>
HPoly<C> homogenize_local(const BiPoly<C>& f) {
    HPoly<C> h;
    long d = f.deg();
    for (const auto& [m, c] : f.terms()) h.emplace(TriMon{d - m.deg(), m.i, m.j}, c);
    return h;
}

template <class C>
BiPoly<C> dehomogenize_local(const HPoly<C>& f) {
    BiPoly<C> g;
    for (const auto& [m, c] : f) g.add_term({m.i, m.j}, c);
    return g;
}

/// integer-primitive for Rat (positive lead), monic for field coefficients
template <class C>
void hp_normalize(HPoly<C>& f) {
    if (f.empty()) return;
    if constexpr (std::is_same_v<C, Rat>) {
        Int den = 1;
        for (auto& [m, c] : f) den = lcm(den, c.den());
        Int num = 0;
        for (auto& [m, c] : f) num = gcd(num, Int(c.num() * (den / c.den())));
        Rat s = Rat(den, num);
        if (f.begin()->second.sign() < 0) s = -s;
        for (auto& [m, c] : f) c *= s;
    } else {
        C s = C(1L) / f.begin()->second;
        for (auto& [m, c] : f) c = c * s;
    }
}

/// head reduction: reduce until zero or the lead is irreducible; the tail is
/// left as is (enough for Buchberger). Fraction-free over Q with per-step
/// content control.
template <class C>
HPoly<C> hp_reduce(HPoly<C> h, const std::vector<HPoly<C>>& G, long xy_bound = -1) {
    if constexpr (std::is_same_v<C, Rat>) hp_normalize(h);
    while (!h.empty()) {
        auto [lm, lc] = *h.begin();
        const HPoly<C>* hit = nullptr;
        for (const auto& g : G) {
            if (g.begin()->first.divides(lm)) {
                hit = &g;
                break;
            }
        }
        if (!hit) break;
        TriMon q = lm.quotient(hit->begin()->first);
        const C& gc = hit->begin()->second;
        if constexpr (std::is_same_v<C, Rat>) {
            // lc, gc integral: cross-scale by gcd-reduced cofactors
            Int a = lc.num(), b = gc.num();
            Int d = gcd(a, b);
            Rat sh{Int(b / d)}, sg{Int(a / d)};
            if (!sh.is_one())
                for (auto& [m, c] : h) c *= sh;
            for (const auto& [m, c] : *hit) hp_add(h, m.mul(q), -(c * sg), xy_bound);
            hp_normalize(h);
        } else {
            C f = lc / gc;
            for (const auto& [m, c] : *hit) hp_add(h, m.mul(q), -(c * f), xy_bound);
        }
    }
    return h;
}

}  // namespace lazard

template <class C>
StandardBasis<C> standard_basis(const std::vector<BiPoly<C>>& gens) {
    using lazard::HPoly;
    using lazard::TriMon;
    std::vector<HPoly<C>> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        HPoly<C> h = lazard::homogenize_local(g);
        lazard::hp_normalize(h);
        G.push_back(std::move(h));
    }
    if (G.empty()) throw std::domain_error("standard_basis: no nonzero generators");

    struct Pair {
        size_t i, j;
        TriMon lcm;
        long deg;
        bool done = false;
    };
    std::vector<Pair> pairs;
    auto push_pair = [&](size_t i, size_t j) {
        TriMon li = G[i].begin()->first, lj = G[j].begin()->first;
        TriMon l{std::max(li.a, lj.a), std::max(li.i, lj.i), std::max(li.j, lj.j)};
        pairs.push_back({i, j, l, l.deg(), false});
    };
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

    // highest-corner truncation: once pure-power leads x^A and y^B exist,
    // m^(A+B-1) lies inside the local ideal and all higher (x,y)-degrees may
    // be treated as zero
    long pure_x = -1, pure_y = -1, xy_bound = -1;
    auto note_lead = [&](const TriMon& l) {
        if (l.j == 0 && (pure_x < 0 || l.i < pure_x)) pure_x = l.i;
        if (l.i == 0 && (pure_y < 0 || l.j < pure_y)) pure_y = l.j;
        if (pure_x >= 0 && pure_y >= 0) {
            long n = pure_x + pure_y - 1;
            if (xy_bound < 0 || n < xy_bound) xy_bound = n;
        }
    };
    for (const auto& g : G) note_lead(g.begin()->first);

    while (true) {
        // normal selection: smallest lcm degree first
        int pick = -1;
        for (size_t k = 0; k < pairs.size(); ++k)
            if (!pairs[k].done && (pick < 0 || pairs[k].deg < pairs[pick].deg))
                pick = (int)k;
        if (pick < 0) break;
        Pair& pr = pairs[pick];
        pr.done = true;
        TriMon li = G[pr.i].begin()->first, lj = G[pr.j].begin()->first;
        // product criterion
        if (std::min(li.a, lj.a) == 0 && std::min(li.i, lj.i) == 0 &&
            std::min(li.j, lj.j) == 0)
            continue;
        // chain criterion: some k with LM_k | lcm and both other pairs handled
        {
            bool skip = false;
            for (size_t k = 0; k < G.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!G[k].begin()->first.divides(pr.lcm)) continue;
                bool done_ik = false, done_jk = false;
                for (const auto& q : pairs) {
                    if (!q.done) continue;
                    if ((q.i == pr.i && q.j == k) || (q.i == k && q.j == pr.i)) done_ik = true;
                    if ((q.i == pr.j && q.j == k) || (q.i == k && q.j == pr.j)) done_jk = true;
                }
                if (done_ik && done_jk) skip = true;
            }
            if (skip) continue;
        }
        if (xy_bound >= 0 && pr.lcm.i + pr.lcm.j >= xy_bound) continue;
        HPoly<C> sp;
        {
            TriMon qi = pr.lcm.quotient(li), qj = pr.lcm.quotient(lj);
            const C &ci = G[pr.i].begin()->second, &cj = G[pr.j].begin()->second;
            for (const auto& [m, c] : G[pr.i]) lazard::hp_add(sp, m.mul(qi), c * cj, xy_bound);
            for (const auto& [m, c] : G[pr.j]) lazard::hp_add(sp, m.mul(qj), -(c * ci), xy_bound);
        }
        HPoly<C> r = lazard::hp_reduce(std::move(sp), G, xy_bound);
        if (r.empty()) continue;
        // strip t-powers: t = 1 under dehomogenization, so t^k * r' may be
        // replaced by r' without changing the dehomogenized ideal
        {
            long mina = -1;
            for (const auto& [m, c] : r) mina = mina < 0 ? m.a : std::min(mina, m.a);
            if (mina > 0) {
                HPoly<C> stripped;
                for (const auto& [m, c] : r) stripped.emplace(TriMon{m.a - mina, m.i, m.j}, c);
                r = std::move(stripped);
            }
        }
        lazard::hp_normalize(r);
#ifdef GERM_SB_TRACE
        {
            long digits = 0;
            if constexpr (std::is_same_v<C, Rat>)
                for (auto& [m, c] : r) digits = std::max(digits, (long)mpz_sizeinbase(c.num().get_mpz_t(), 10));
            fprintf(stderr, "[sb] pair(%zu,%zu)d%ld -> gen#%zu lead t^%ld x^%ld y^%ld |r|=%zu dig=%ld pairs=%zu\n",
                    pr.i, pr.j, pr.deg, G.size(), r.begin()->first.a, r.begin()->first.i,
                    r.begin()->first.j, r.size(), digits, pairs.size());
        }
#endif
        long prev_bound = xy_bound;
        note_lead(r.begin()->first);
        G.push_back(std::move(r));
        for (size_t k = 0; k + 1 < G.size(); ++k) push_pair(k, G.size() - 1);
        if (xy_bound != prev_bound) {
            // tails beyond the certified corner are ideal members: drop them
            for (auto& g : G) {
                if (g.begin()->first.i + g.begin()->first.j >= xy_bound) continue;
                for (auto it = g.begin(); it != g.end();)
                    it = (it->first.i + it->first.j >= xy_bound) ? g.erase(it) : std::next(it);
            }
        }
    }
    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<BiPoly<C>> out;
    for (size_t k = 0; k < G.size(); ++k) {
        bool redundant = false;
        for (size_t l = 0; l < G.size() && !redundant; ++l) {
            if (l == k) continue;
            const TriMon &lk = G[k].begin()->first, &ll = G[l].begin()->first;
            if (ll.divides(lk) && !(lk == ll && l > k)) redundant = true;
        }
        if (!redundant) {
            BiPoly<C> d = lazard::dehomogenize_local(G[k]);
            if constexpr (!std::is_same_v<C, Rat>) d = d.scaled(C(1L) / lead(d).c);
            out.push_back(std::move(d));
        }
    }
    std::sort(out.begin(), out.end(), [](const BiPoly<C>& f, const BiPoly<C>& g) {
        return MonLess{}(lead(f).m, lead(g).m);
    });
    return StandardBasis<C>(out);
}

/// Fully reduced normal form: no remainder term divisible by a lead monomial
/// of G. For zero-dimensional lead ideals the computation truncates at the
/// degree where the whole power of the maximal ideal lies inside (highest
/// corner), which makes the result the canonical representative on the
/// monomial basis. Otherwise falls back to iterated weak normal forms.
template <class C>
BiPoly<C> mora_normal_form(const BiPoly<C>& f, const StandardBasis<C>& G) {
    auto px = G.pure_x_power(), py = G.pure_y_power();
    long trunc = (px && py) ? *px + *py : -1;
    BiPoly<C> h = trunc >= 0 ? jet(f, trunc - 1) : f;
    BiPoly<C> result;
    long guard = 0;
    while (!h.is_zero()) {
        if (++guard > 2000000)
            throw std::runtime_error("mora_normal_form: reduction not terminating");
        LeadTerm<C> lh = lead(h);
        int hit = -1;
        for (size_t k = 0; k < G.generators().size(); ++k)
            if (G.lead_monomials()[k].divides(lh.m)) {
                hit = (int)k;
                break;
            }
        if (hit < 0) {
            result.add_term(lh.m, lh.c);
            BiPoly<C> tail = h;
            tail.add_term(lh.m, -lh.c);
            if (trunc < 0 && !tail.is_zero()) {
                // no truncation bound available: weak-reduce the tail head
                h = mora_weak_nf(tail, G.generators());
            } else {
                h = tail;
            }
            continue;
        }
        const BiPoly<C>& g = G.generators()[hit];
        LeadTerm<C> lg = lead(g);
        h = h - g.mul_mon(lh.m.quotient(lg.m)).scaled(lh.c / lg.c);
        if (trunc >= 0) h = jet(h, trunc - 1);
    }
    return result;
}

struct MilnorData {
    bool finite = false;
    long mu = -1;  // valid when finite
    std::vector<Mon> basis;
};

template <class C>
MilnorData milnor_number_sb(const StandardBasis<C>& sb) {
    MilnorData out;
    auto px = sb.pure_x_power(), py = sb.pure_y_power();
    if (!px || !py) return out;  // infinite
    out.finite = true;
    for (long i = 0; i < *px; ++i)
        for (long j = 0; j < *py; ++j)
            if (!sb.lead_divides({i, j})) out.basis.push_back({i, j});
    std::sort(out.basis.begin(), out.basis.end(), MonLess{});
    out.mu = (long)out.basis.size();
    return out;
}

template <class C>
StandardBasis<C> jacobian_basis(const BiPoly<C>& f) {
    std::vector<BiPoly<C>> gens;
    if (!f.dx().is_zero()) gens.push_back(f.dx());
    if (!f.dy().is_zero()) gens.push_back(f.dy());
    if (gens.empty()) throw std::domain_error("jacobian_basis: zero Jacobian ideal");
    return standard_basis(gens);
}

/// Milnor number with monomial basis of the local algebra.
template <class C>
MilnorData milnor_number(const BiPoly<C>& f) {
    if (f.is_zero()) throw std::domain_error("milnor_number: zero germ");
    if (!f.coeff({0, 0}).is_zero())
        throw std::domain_error("milnor_number: germ must vanish at the origin");
    return milnor_number_sb(jacobian_basis(f));
}

/// Least k <= mu+1 with m^{k+1} contained in m^2*Jac(f).
template <class C>
long determinacy_bound(const BiPoly<C>& f) {
    MilnorData md = milnor_number(f);
    if (!md.finite) throw std::domain_error("determinacy_bound: infinite Milnor number");
    std::vector<BiPoly<C>> gens;
    const Mon m2[3] = {{2, 0}, {1, 1}, {0, 2}};
    for (const auto& p : {f.dx(), f.dy()}) {
        if (p.is_zero()) continue;
        for (const auto& m : m2) gens.push_back(p.mul_mon(m));
    }
    StandardBasis<C> sb = standard_basis(gens);
    for (long k = 1; k <= md.mu + 1; ++k) {
        bool all_in = true;
        for (long i = 0; i <= k + 1 && all_in; ++i) {
            BiPoly<C> mono = BiPoly<C>::term(C(1L), {i, k + 1 - i});
            if (!mora_normal_form(mono, sb).is_zero()) all_in = false;
        }
        if (all_in) return k;
    }
    return md.mu + 1;
}

/// 2 - rank of the Hessian at the origin; requires vanishing linear part.
template <class C>
int corank(const BiPoly<C>& f) {
    if (!f.coeff({0, 0}).is_zero())
        throw std::domain_error("corank: germ must vanish at the origin");
    if (!f.coeff({1, 0}).is_zero() || !f.coeff({0, 1}).is_zero())
        throw std::domain_error("corank: smooth germ (nonzero linear part)");
    C a = f.coeff({2, 0}), b = f.coeff({1, 1}), c = f.coeff({0, 2});
    C det = C(4L) * a * c - b * b;
    if (!det.is_zero()) return 0;
    if (a.is_zero() && b.is_zero() && c.is_zero()) return 2;
    return 1;
}

}  // namespace germ

#endif
