#include "germ/whfactor.hpp"

#include <algorithm>
#include <cassert>

namespace germ {

std::vector<RootClass> multiplicity_structure(const TowerPtr& K, const UniPoly<AlgNum>& u) {
    if (u.is_zero()) throw std::domain_error("multiplicity_structure: zero polynomial");
    std::vector<RootClass> out;
    for (const auto& [part, mult] : squarefree_decomposition(u)) {
        for (const auto& irr : factor_squarefree_tower(K, part))
            out.push_back({irr, mult});
    }
    return out;
}

WHFactorization::WHFactorization(const KPoly& facet_jet_poly, const Weight& w) : w_(w) {
    auto [sat, a, b] = saturate(facet_jet_poly);
    a_ = a;
    b_ = b;
    tower_ = poly_tower(facet_jet_poly);
    u_ = dehomogenize(sat, w);
    classes_ = squarefree_decomposition(u_);
}

int WHFactorization::n_weighted_linear() const {
    if (!roots_are_weighted_linear()) return 0;
    int n = 0;
    for (const auto& [part, mult] : classes_) n += part.deg();
    return n;
}

int WHFactorization::max_root_multiplicity() const {
    int m = 0;
    for (const auto& [part, mult] : classes_) m = std::max(m, mult);
    return m;
}

int WHFactorization::multiple_root_count() const {
    int n = 0;
    for (const auto& [part, mult] : classes_)
        if (mult > 1) n += part.deg();
    return n;
}

std::vector<std::pair<KPoly, int>> WHFactorization::linear_factors(TowerPtr* final_tower) const {
    std::vector<std::pair<KPoly, int>> out;
    TowerPtr t = tower_;
    if (roots_are_weighted_linear()) {
        for (const auto& [part, mult] : classes_) {
            UniPoly<AlgNum> rest = part;
            while (rest.deg() >= 1) {
                auto irreducibles = factor_squarefree_tower(t, rest);
                auto [root, t2] = adjoin_root(t, irreducibles.front());
                t = t2;
                // weighted-linear factor y^wx - root * x^wy
                KPoly g;
                g.add_term({0, w_.wx}, AlgNum(1L));
                g.add_term({w_.wy, 0}, -root);
                out.emplace_back(g, mult);
                // peel the used root and keep splitting over the grown tower
                std::vector<AlgNum> lin{-root, AlgNum(1L)};
                UniPoly<AlgNum> lifted_rest = rest;
                {
                    std::vector<AlgNum> cs(rest.coeffs().size());
                    for (size_t i = 0; i < cs.size(); ++i) cs[i] = rest.coeffs()[i].lifted_to(t);
                    lifted_rest = UniPoly<AlgNum>(std::move(cs));
                }
                rest = divrem(lifted_rest, UniPoly<AlgNum>(std::move(lin))).first;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& p, const auto& q) { return p.second > q.second; });
    if (final_tower) *final_tower = t;
    return out;
}

bool is_facet_nondegenerate_k(const KPoly& f, const Facet& facet) {
    KPoly fj = facet_jet(f, facet);
    auto [sat, a, b] = saturate(fj);
    UniPoly<AlgNum> u = dehomogenize(sat, facet.w);
    return is_squarefree(u);
}

bool check_normalization_k(const KPoly& f, const Facet& facet) {
    KPoly fj = facet_jet(f, facet);
    WHFactorization wh(fj, facet.w);
    long a = wh.x_exp(), b = wh.y_exp();
    int n = wh.n_weighted_linear();
    if (facet.w.wx == facet.w.wy) return a != 0 && b != 0;
    if (facet.w.wx > facet.w.wy && a == 0) return n == 0;
    if (facet.w.wx < facet.w.wy && b == 0) return n == 0;
    return true;
}

bool is_smooth_facet(const KPoly& f, const Facet& facet) {
    KPoly fj = facet_jet(f, facet);
    auto [sat, a, b] = saturate(fj);
    return !sat.coeff({1, 0}).is_zero() || !sat.coeff({0, 1}).is_zero();
}

}  // namespace germ
