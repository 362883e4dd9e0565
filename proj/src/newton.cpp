#include "germ/newton.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace germ {

std::vector<Mon> Facet::lattice_points() const {
    std::vector<Mon> pts;
    long dx = b.i - a.i, dy = b.j - a.j;
    long g = gcd_long(dx, dy);
    long sx = dx / g, sy = dy / g;
    for (long k = 0; k <= g; ++k) pts.push_back({a.i + k * sx, a.j + k * sy});
    return pts;
}

NewtonPolygon NewtonPolygon::from_support(const std::vector<Mon>& support) {
    if (support.empty()) throw std::domain_error("NewtonPolygon: empty support");
    // Pareto frontier: drop dominated points, sort x ascending
    std::vector<Mon> pts = support;
    std::sort(pts.begin(), pts.end(), [](const Mon& p, const Mon& q) {
        return p.i != q.i ? p.i < q.i : p.j < q.j;
    });
    std::vector<Mon> frontier;
    long best_j = -1;
    // left-to-right: a point survives iff nothing weakly left of it is weakly below
    for (const auto& p : pts) {
        if (best_j < 0 || p.j < best_j) {
            frontier.push_back(p);
            best_j = p.j;
        }
    }
    // monotone chain keeping only extreme points of the lower-left hull
    std::vector<Mon> hull;
    for (const auto& p : frontier) {
        while (hull.size() >= 2) {
            const Mon& r = hull[hull.size() - 2];
            const Mon& s = hull[hull.size() - 1];
            // keep s only on a strict left turn r -> s -> p
            long cross = (s.i - r.i) * (p.j - s.j) - (s.j - r.j) * (p.i - s.i);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    NewtonPolygon poly;
    poly.v_ = std::move(hull);
    for (size_t k = 0; k + 1 < poly.v_.size(); ++k) {
        Facet fa;
        fa.a = poly.v_[k];
        fa.b = poly.v_[k + 1];
        long dx = fa.b.i - fa.a.i, dy = fa.a.j - fa.b.j;  // both > 0
        long g = gcd_long(dx, dy);
        fa.w = Weight{dy / g, dx / g};
        fa.wdeg = fa.w.deg(fa.a);
        assert(fa.wdeg == fa.w.deg(fa.b));
        fa.lattice_length = g;
        poly.f_.push_back(fa);
    }
    return poly;
}

PiecewiseWeight NewtonPolygon::piecewise_weight() const {
    if (f_.empty())
        throw std::domain_error("piecewise_weight: polygon has no facet");
    PiecewiseWeight pw;
    long d = 1;
    for (const auto& fa : f_) d = lcm_long(d, fa.wdeg);
    pw.d = d;
    for (const auto& fa : f_) pw.scaled.emplace_back(fa.w, d / fa.wdeg);
    return pw;
}

bool NewtonPolygon::is_vertex(const Mon& m) const {
    for (const auto& v : v_)
        if (v == m) return true;
    return false;
}

std::vector<Facet> NewtonPolygon::facets_adjacent_to(const Mon& m) const {
    std::vector<Facet> out;
    for (const auto& fa : f_)
        if (fa.a == m || fa.b == m) out.push_back(fa);
    return out;
}

NewtonPolygon NewtonPolygon::mirrored() const {
    std::vector<Mon> sup;
    for (const auto& v : v_) sup.push_back({v.j, v.i});
    return from_support(sup);
}

std::string NewtonPolygon::str() const {
    auto pt = [](const Mon& m) {
        return "[" + std::to_string(m.i) + "," + std::to_string(m.j) + "]";
    };
    std::string s = "vertices: ";
    for (size_t k = 0; k < v_.size(); ++k) s += (k ? ", " : "") + pt(v_[k]);
    s += "\nfacets: ";
    for (size_t k = 0; k < f_.size(); ++k)
        s += (k ? ", " : "") + ("[" + pt(f_[k].a) + ", " + pt(f_[k].b) + "]");
    s += "\nnormals: ";
    for (size_t k = 0; k < f_.size(); ++k)
        s += (k ? ", " : "") +
             ("[" + std::to_string(f_[k].w.wx) + "," + std::to_string(f_[k].w.wy) + "]");
    return s;
}

long newton_number_of(const NewtonPolygon& p) {
    if (!p.touches_x_axis() || !p.touches_y_axis())
        throw std::domain_error("newton_number: polygon must meet both axes");
    // 2S as an exact integer via trapezoids under the boundary
    long two_s = 0;
    const auto& v = p.vertices();
    for (size_t k = 0; k + 1 < v.size(); ++k)
        two_s += (v[k + 1].i - v[k].i) * (v[k].j + v[k + 1].j);
    long a = p.x_intercept(), b = p.y_intercept();
    return two_s - a - b + 1;
}

ModalityCount modality_lattice(const NewtonPolygon& p) {
    ModalityCount out;
    if (!p.has_facets()) {
        // single-vertex polygon: no region, vacuous count
        return out;
    }
    PiecewiseWeight w = p.piecewise_weight();
    long maxi = 2, maxj = 2;
    for (const auto& v : p.vertices()) {
        maxi = std::max(maxi, v.i);
        maxj = std::max(maxj, v.j);
    }
    for (long i = 2; i <= maxi; ++i)
        for (long j = 2; j <= maxj; ++j)
            if (w.deg({i, j}) <= w.d) out.witnesses.push_back({i, j});
    out.count = (long)out.witnesses.size();
    return out;
}

MonPosition classify_monomial(const Mon& m, const NewtonPolygon& p) {
    if (!p.has_facets())
        throw std::domain_error("classify_monomial: polygon has no facet");
    PiecewiseWeight w = p.piecewise_weight();
    long v = w.deg(m);
    if (v < w.d) return MonPosition::below;
    if (v == w.d) return MonPosition::on;
    return MonPosition::above;
}

}  // namespace germ
