#include "germ/towerfactor.hpp"

#include <algorithm>
#include <cassert>

namespace germ {

namespace {

UniPoly<Rat> to_rational_poly(const UniPoly<AlgNum>& u) {
    std::vector<Rat> cs(u.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = u.coeffs()[i].rational_value();
    return UniPoly<Rat>(std::move(cs));
}

UniPoly<AlgNum> from_rational_poly(const UniPoly<Rat>& u) {
    std::vector<AlgNum> cs(u.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = AlgNum(u.coeffs()[i]);
    return UniPoly<AlgNum>(std::move(cs));
}

// coefficient of u as a polynomial in z, where z replaces the top generator
// of K; the result lives over K->base().
std::vector<UniPoly<AlgNum>> alpha_to_z(const TowerPtr& K, const UniPoly<AlgNum>& u) {
    std::vector<UniPoly<AlgNum>> out(u.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        AlgNum c = u.coeffs()[i].lifted_to(K);
        out[i] = UniPoly<AlgNum>(c.coords());  // coords over K->base()
    }
    return out;
}

int total_cmp(const UniPoly<AlgNum>& a, const UniPoly<AlgNum>& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = a.deg(); i >= 0; --i) {
        int c = AlgNum::cmp(a[i], b[i]);
        if (c) return c;
    }
    return 0;
}

}  // namespace

std::vector<UniPoly<AlgNum>> factor_squarefree_tower(const TowerPtr& K,
                                                     const UniPoly<AlgNum>& u) {
    std::vector<UniPoly<AlgNum>> out;
    if (u.deg() <= 0) return out;
    UniPoly<AlgNum> f = u.monic();
    if (f.deg() == 1) {
        out.push_back(f);
        return out;
    }
    if (!K) {
        for (auto& g : factor_squarefree_rational(to_rational_poly(f)))
            out.push_back(from_rational_poly(g));
        return out;
    }
    const UniPoly<AlgNum>& m = K->minpoly();  // over K->base()
    AlgNum alpha = AlgNum::generator(K);
    int dn = m.deg() * f.deg();
    for (long s = 0;; s = s > 0 ? -s : -s + 1) {
        // f_s(t) = f(t - s*alpha), norm N(t) = Res_z(m(z), f_s-hat(t,z))
        UniPoly<AlgNum> fs = f.shifted(AlgNum(-s) * alpha);
        std::vector<UniPoly<AlgNum>> fhat = alpha_to_z(K, fs);  // over base
        // evaluate/interpolate N over the base tower
        std::vector<AlgNum> xs(dn + 1), ys(dn + 1);
        for (int i = 0; i <= dn; ++i) {
            long e = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);
            AlgNum ev(e);
            // f_s-hat(e, z) over base
            UniPoly<AlgNum> q;
            AlgNum pw(1L);
            for (size_t j = 0; j < fhat.size(); ++j) {
                q = q + fhat[j].scaled(pw);
                pw = pw * ev;
            }
            xs[i] = ev;
            ys[i] = field_resultant(m, q);
        }
        // Lagrange interpolation (base tower is a field)
        UniPoly<AlgNum> N;
        for (int i = 0; i <= dn; ++i) {
            UniPoly<AlgNum> li = UniPoly<AlgNum>::constant(AlgNum(1L));
            AlgNum denom(1L);
            for (int j = 0; j <= dn; ++j) {
                if (j == i) continue;
                li = li * UniPoly<AlgNum>(std::vector<AlgNum>{-xs[j], AlgNum(1L)});
                denom = denom * (xs[i] - xs[j]);
            }
            N = N + li.scaled(ys[i] / denom);
        }
        if (!is_squarefree(N)) continue;
        auto nf = factor_squarefree_tower(K->base(), N);
        for (auto& Ni : nf) {
            // lift N_i to K and undo the shift
            UniPoly<AlgNum> NiK = Ni.shifted(AlgNum(s) * alpha);
            UniPoly<AlgNum> g = poly_gcd(f, NiK);
            if (g.deg() >= 1) out.push_back(g.monic());
        }
        int sum = 0;
        for (auto& g : out) sum += g.deg();
        assert(sum == f.deg());
        std::sort(out.begin(), out.end(),
                  [](const UniPoly<AlgNum>& a, const UniPoly<AlgNum>& b) {
                      return total_cmp(a, b) < 0;
                  });
        return out;
    }
}

bool is_irreducible_tower(const TowerPtr& K, const UniPoly<AlgNum>& u) {
    if (u.deg() <= 0) return false;
    if (u.deg() == 1) return true;
    if (!is_squarefree(u)) return false;
    return factor_squarefree_tower(K, u).size() == 1;
}

TowerPtr extend(const TowerPtr& base, const std::string& gen_name,
                const UniPoly<AlgNum>& minpoly) {
    if (minpoly.deg() < 2) throw std::domain_error("extend: minimal polynomial degree must be >= 2");
    if (!minpoly.lc().is_one()) throw std::domain_error("extend: minimal polynomial must be monic");
    if (!is_squarefree(minpoly)) {
        auto sq = squarefree_decomposition(minpoly);
        throw reducible_minpoly(sq.front().first.str("t", &algnum_str));
    }
    auto factors = factor_squarefree_tower(base, minpoly);
    if (factors.size() > 1) throw reducible_minpoly(factors.front().str("t", &algnum_str));
    std::vector<AlgNum> cs(minpoly.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = minpoly.coeffs()[i].lifted_to(base);
    return Tower::extend_unchecked(base, gen_name, UniPoly<AlgNum>(std::move(cs)));
}

std::pair<AlgNum, TowerPtr> adjoin_root(const TowerPtr& K, const UniPoly<AlgNum>& v) {
    if (v.deg() < 1) throw std::domain_error("adjoin_root: constant polynomial");
    if (v.deg() == 1) {
        UniPoly<AlgNum> m = v.monic();
        return {-m[0], K};
    }
    std::string name = "r" + std::to_string((K ? K->height() : 0) + 1);
    // lift coefficients to K so the minimal polynomial is over the base
    UniPoly<AlgNum> m = v.monic();
    std::vector<AlgNum> cs(m.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = m.coeffs()[i].lifted_to(K);
    TowerPtr t = Tower::extend_unchecked(K, name, UniPoly<AlgNum>(std::move(cs)));
    return {AlgNum::generator(t), t};
}

}  // namespace germ
