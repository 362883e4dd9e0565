#ifndef GERM_NEWTON_HPP
#define GERM_NEWTON_HPP

#include <optional>
#include <string>
#include <vector>

#include "germ/poly.hpp"

namespace germ {

/// Compact segment of the Newton boundary, endpoints ordered by increasing
/// x-exponent. The normal is the primitive inner normal with positive
/// entries; wdeg is its value on the facet.
struct Facet {
    Mon a, b;
    Weight w;
    long wdeg = 0;
    long lattice_length = 0;  // number of lattice steps along the facet
    friend bool operator==(const Facet& s, const Facet& t) {
        return s.a == t.a && s.b == t.b;
    }
    std::vector<Mon> lattice_points() const;  // all lattice points on the segment
    bool touches_x_axis() const { return b.j == 0; }
    bool touches_y_axis() const { return a.i == 0; }
};

/// Lower-left convex hull of a support: the Newton polygon.
class NewtonPolygon {
  public:
    static NewtonPolygon from_support(const std::vector<Mon>& support);

    const std::vector<Mon>& vertices() const { return v_; }
    const std::vector<Facet>& facets() const { return f_; }
    bool has_facets() const { return !f_.empty(); }

    bool touches_x_axis() const { return !v_.empty() && v_.back().j == 0; }
    bool touches_y_axis() const { return !v_.empty() && v_.front().i == 0; }
    long x_intercept() const { return touches_x_axis() ? v_.back().i : -1; }
    long y_intercept() const { return touches_y_axis() ? v_.front().j : -1; }

    PiecewiseWeight piecewise_weight() const;  // requires >= 1 facet

    bool is_vertex(const Mon& m) const;
    std::vector<Facet> facets_adjacent_to(const Mon& m) const;  // by increasing slope

    NewtonPolygon mirrored() const;
    std::string str() const;

    friend bool operator==(const NewtonPolygon& p, const NewtonPolygon& q) {
        return p.v_ == q.v_;
    }

  private:
    std::vector<Mon> v_;   // x ascending (hence y descending)
    std::vector<Facet> f_;
};

template <class C>
NewtonPolygon newton_polygon(const BiPoly<C>& f) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    return NewtonPolygon::from_support(f.support());
}

template <class C>
bool is_convenient(const BiPoly<C>& f) {
    bool px = false, py = false;
    for (const auto& [m, c] : f.terms()) {
        px |= (m.j == 0);
        py |= (m.i == 0);
    }
    return px && py;
}

/// sum of the terms of f lying on the facet (errors if not a facet of f)
template <class C>
BiPoly<C> facet_jet(const BiPoly<C>& f, const Facet& facet) {
    auto poly = newton_polygon(f);
    bool found = false;
    for (const auto& g : poly.facets()) found |= (g == facet);
    if (!found) throw std::domain_error("facet_jet: not a facet of the Newton polygon");
    return w_slice(f, facet.w, facet.wdeg);
}

/// Kouchnirenko's Newton number 2S - a - b + 1 (requires convenient germ)
template <class C>
long newton_number(const BiPoly<C>& f) {
    if (!is_convenient(f)) throw std::domain_error("newton_number: germ not convenient");
    return newton_number_of(newton_polygon(f));
}

long newton_number_of(const NewtonPolygon& p);

struct ModalityCount {
    long count = 0;
    std::vector<Mon> witnesses;
};

/// lattice points (i,j), i,j >= 2, on or under the boundary
ModalityCount modality_lattice(const NewtonPolygon& p);

enum class MonPosition { below, on, above };

MonPosition classify_monomial(const Mon& m, const NewtonPolygon& p);

}  // namespace germ

#endif
