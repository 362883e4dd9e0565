#ifndef GERM_WHFACTOR_HPP
#define GERM_WHFACTOR_HPP

#include <utility>
#include <vector>

#include "germ/newton.hpp"
#include "germ/poly.hpp"
#include "germ/towerfactor.hpp"
#include "germ/unipoly.hpp"

namespace germ {

/// Dehomogenization of a saturated weighted-homogeneous g with respect to
/// w = (wx, wy) in lowest terms: x^wy -> 1, y^wx -> t. Requires
/// g in K[x^wy, y^wx] (guaranteed for saturated facet jets).
template <class C>
UniPoly<C> dehomogenize(const BiPoly<C>& g, const Weight& w) {
    if (g.is_zero()) throw std::domain_error("dehomogenize: zero polynomial");
    long d = -1;
    std::vector<C> cs;
    for (const auto& [m, c] : g.terms()) {
        long wd = w.deg(m);
        if (d < 0) d = wd;
        if (wd != d) throw std::domain_error("dehomogenize: not weighted homogeneous");
        if (m.i % w.wy != 0 || m.j % w.wx != 0)
            throw std::domain_error("dehomogenize: term outside K[x^wy, y^wx]");
        long k = m.j / w.wx;
        if ((long)cs.size() <= k) cs.resize(k + 1, C{});
        cs[k] = cs[k] + c;
    }
    return UniPoly<C>(std::move(cs));
}

/// Inverse of dehomogenize at weighted degree D*wx*wy: t^k -> x^{wy(D-k)} y^{wx k}.
template <class C>
BiPoly<C> homogenize(const UniPoly<C>& u, const Weight& w, long D) {
    BiPoly<C> g;
    for (long k = 0; k <= u.deg(); ++k)
        if (!u[k].is_zero()) g.add_term({w.wy * (D - k), w.wx * k}, u[k]);
    return g;
}

/// One conjugacy class of roots of the dehomogenized facet polynomial:
/// an irreducible factor over the coefficient tower with its multiplicity.
struct RootClass {
    UniPoly<AlgNum> minimal;  // monic irreducible over the tower
    int multiplicity = 0;
};

/// Full multiplicity profile of u over its closure: squarefree decomposition,
/// each part split into irreducible factors over K (wh-factor op).
std::vector<RootClass> multiplicity_structure(const TowerPtr& K, const UniPoly<AlgNum>& u);

/// Weighted-homogeneous factorization of a facet jet:
/// jet = c * x^a * y^b * (weighted-linear factors from the roots of u) * residual.
/// Roots are weighted-linear exactly when min(wx, wy) = 1; otherwise every
/// root contributes to the nonlinear residual.
class WHFactorization {
  public:
    WHFactorization(const KPoly& facet_jet_poly, const Weight& w);

    long x_exp() const { return a_; }
    long y_exp() const { return b_; }
    const Weight& weight() const { return w_; }
    const UniPoly<AlgNum>& dehomogenized() const { return u_; }
    /// (squarefree part, multiplicity) pairs of u, multiplicity ascending
    const std::vector<std::pair<UniPoly<AlgNum>, int>>& classes() const { return classes_; }

    bool roots_are_weighted_linear() const { return std::min(w_.wx, w_.wy) == 1; }
    /// number of distinct weighted-linear factors not associated to x or y
    int n_weighted_linear() const;
    /// largest root multiplicity (0 when u is constant)
    int max_root_multiplicity() const;
    /// number of distinct roots with multiplicity > 1
    int multiple_root_count() const;
    bool saturation_squarefree() const { return max_root_multiplicity() <= 1; }

    /// materialized weighted-linear factors with multiplicities, sorted by
    /// descending multiplicity (may extend towers); for tests and reports
    std::vector<std::pair<KPoly, int>> linear_factors(TowerPtr* final_tower = nullptr) const;

  private:
    Weight w_;
    long a_ = 0, b_ = 0;
    TowerPtr tower_;
    UniPoly<AlgNum> u_;
    std::vector<std::pair<UniPoly<AlgNum>, int>> classes_;
};

/// facet jet has non-degenerate saturation: gcd(u, u') constant
template <class C>
bool is_facet_nondegenerate(const BiPoly<C>& f, const Facet& facet);

/// the three-line normalization table of the facet jet factorization
template <class C>
bool check_normalization(const BiPoly<C>& f, const Facet& facet);

// concrete implementations over towers; rational germs are lifted
bool is_facet_nondegenerate_k(const KPoly& f, const Facet& facet);
bool check_normalization_k(const KPoly& f, const Facet& facet);

template <class C>
bool is_facet_nondegenerate(const BiPoly<C>& f, const Facet& facet) {
    if constexpr (std::is_same_v<C, AlgNum>)
        return is_facet_nondegenerate_k(f, facet);
    else
        return is_facet_nondegenerate_k(lift_poly(f), facet);
}

template <class C>
bool check_normalization(const BiPoly<C>& f, const Facet& facet) {
    if constexpr (std::is_same_v<C, AlgNum>)
        return check_normalization_k(f, facet);
    else
        return check_normalization_k(lift_poly(f), facet);
}

/// smooth facet: saturation of its jet is a smooth germ (has a linear term)
bool is_smooth_facet(const KPoly& f, const Facet& facet);

}  // namespace germ

#endif
