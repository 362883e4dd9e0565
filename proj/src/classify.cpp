#include "germ/classify.hpp"

#include <algorithm>
#include <cassert>

#include "germ/localalg.hpp"
#include "germ/localdim.hpp"

namespace germ {

namespace {

KPoly kvar_x() { return KPoly::var_x(); }
KPoly kvar_y() { return KPoly::var_y(); }

// linear form alpha*x + beta*y
struct LinForm {
    AlgNum alpha, beta;
};

// substitution images (A, B) with g1(A,B) = x and g2(A,B) = y
std::pair<KPoly, KPoly> solve_two_forms(const LinForm& g1, const LinForm& g2) {
    AlgNum det = g1.alpha * g2.beta - g1.beta * g2.alpha;
    if (det.is_zero()) throw std::domain_error("solve_two_forms: dependent forms");
    AlgNum inv = det.inv();
    KPoly A = kvar_x().scaled(g2.beta * inv) + kvar_y().scaled(-(g1.beta) * inv);
    KPoly B = kvar_x().scaled(-(g2.alpha) * inv) + kvar_y().scaled(g1.alpha * inv);
    return {A, B};
}

struct FactorEntry {
    enum class What { axis_x, axis_y, root };
    What what;
    int multiplicity = 0;
    UniPoly<AlgNum> irr;  // for roots: irreducible factor over the tower
};

// multiplicity desc; ties: axis x, axis y, then roots by (degree, coeffs)
bool factor_order(const FactorEntry& a, const FactorEntry& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    auto rank = [](const FactorEntry& e) {
        return e.what == FactorEntry::What::axis_x ? 0
               : e.what == FactorEntry::What::axis_y ? 1 : 2;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.what != FactorEntry::What::root) return false;
    if (a.irr.deg() != b.irr.deg()) return a.irr.deg() < b.irr.deg();
    for (int i = a.irr.deg(); i >= 0; --i) {
        int c = AlgNum::cmp(a.irr[i], b.irr[i]);
        if (c) return c < 0;
    }
    return false;
}

}  // namespace

KPoly Transformation::apply(const KPoly& f) const {
    KPoly g = f;
    for (const auto& st : steps) {
        switch (st.kind) {
            case TransformStep::Kind::elementary: {
                TowerPtr t = poly_tower(st.image_x, poly_tower(st.image_y, poly_tower(g)));
                g = compose(lift_poly(g, t), lift_poly(st.image_x, t), lift_poly(st.image_y, t));
                break;
            }
            case TransformStep::Kind::truncate:
                g = jet(g, st.bound);
                break;
            case TransformStep::Kind::add_term:
                g = g + st.term;
                break;
        }
    }
    return g;
}

StageResult normalize_standard_jet(const KPoly& f) {
    StageResult out;
    out.germ = f;
    long d = f.ord();
    KPoly jet_d = jet(f, d);
    WHFactorization wh(jet_d, Weight{1, 1});
    long a = wh.x_exp(), b = wh.y_exp();
    TowerPtr tower = poly_tower(f);

    int multiple_nonaxis = 0;
    for (const auto& [cls, mult] : wh.classes())
        if (mult > 1) multiple_nonaxis += cls.deg();
    if (multiple_nonaxis == 0) {
        out.ok = true;  // saturation squarefree already
        return out;
    }
    int multiples = multiple_nonaxis + (a >= 2 ? 1 : 0) + (b >= 2 ? 1 : 0);
    if (multiples > 2) {
        out.failure = "degenerate Newton boundary";
        return out;
    }

    // split multiple classes into irreducible factors and order them
    std::vector<FactorEntry> mult_entries;
    if (a >= 2) mult_entries.push_back({FactorEntry::What::axis_x, (int)a, {}});
    if (b >= 2) mult_entries.push_back({FactorEntry::What::axis_y, (int)b, {}});
    for (const auto& [cls, mult] : wh.classes()) {
        if (mult <= 1) continue;
        for (const auto& irr : factor_squarefree_tower(tower, cls))
            mult_entries.push_back({FactorEntry::What::root, mult, irr});
    }
    std::sort(mult_entries.begin(), mult_entries.end(), factor_order);

    TowerPtr t = tower;
    auto form_of = [&](const FactorEntry& e) -> LinForm {
        switch (e.what) {
            case FactorEntry::What::axis_x:
                return {AlgNum(1L), AlgNum(0L)};
            case FactorEntry::What::axis_y:
                return {AlgNum(0L), AlgNum(1L)};
            default: {
                std::vector<AlgNum> cs(e.irr.coeffs().size());
                for (size_t i = 0; i < cs.size(); ++i) cs[i] = e.irr.coeffs()[i].lifted_to(t);
                auto [root, t2] = adjoin_root(t, UniPoly<AlgNum>(std::move(cs)));
                t = t2;
                return {-root, AlgNum(1L)};  // y - root*x
            }
        }
    };

    KPoly A, B;
    if (mult_entries.size() >= 2) {
        LinForm g1 = form_of(mult_entries[0]);
        LinForm g2 = form_of(mult_entries[1]);
        std::tie(A, B) = solve_two_forms(g1, g2);
    } else {
        LinForm g1 = form_of(mult_entries[0]);
        // single multiple factor, not an axis: map it to x keeping y
        AlgNum inv = g1.alpha.inv();
        A = kvar_x().scaled(inv) + kvar_y().scaled(-(g1.beta) * inv);
        B = kvar_y();
    }
    if (A == kvar_x() && B == kvar_y()) {
        out.ok = true;  // nothing to move
        return out;
    }
    A = lift_poly(A, t);
    B = lift_poly(B, t);
    out.germ = compose(lift_poly(f, t), A, B);
    out.steps.push_back({TransformStep::Kind::elementary, A, B, -1, {}});
    out.changed = true;

    KPoly nj = jet(out.germ, out.germ.ord());
    if (!WHFactorization(nj, Weight{1, 1}).saturation_squarefree()) {
        out.failure = "degenerate Newton boundary";
        return out;
    }
    out.ok = true;
    return out;
}

StageResult normalize_facet(const KPoly& f, const Weight& w) {
    StageResult out;
    out.germ = f;
    if (w.wx == w.wy) throw std::domain_error("normalize_facet: weight must be non-standard");
    long dw = -1;
    for (const auto& [m, c] : f.terms()) {
        long v = w.deg(m);
        if (dw < 0 || v < dw) dw = v;
    }
    KPoly h = w_slice(f, w, dw);
    auto [sat, A, B] = saturate(h);
    UniPoly<AlgNum> u = dehomogenize(sat, w);
    TowerPtr tower = poly_tower(f);
    bool mappable = (w.wx < w.wy) ? (w.wx == 1) : (w.wy == 1);

    auto classes = squarefree_decomposition(u);
    int multiple_roots = 0;
    for (const auto& [cls, mult] : classes)
        if (mult > 1) multiple_roots += cls.deg();
    long kept_axis_power = (w.wx < w.wy) ? B : A;  // one-sided saturation keeps it
    int multiples = multiple_roots + (kept_axis_power >= 2 ? 1 : 0);

    if (multiples >= 2 || (multiple_roots >= 1 && !mappable)) {
        // two multiple factors, or a multiple factor in the nonlinear residual
        out.failure = "degenerate Newton boundary";
        return out;
    }
    if (!mappable) {
        out.ok = true;  // n = 0, nothing to transform
        return out;
    }

    // choose g1: the multiple root class if present, else the minimal simple root
    std::vector<FactorEntry> roots;
    for (const auto& [cls, mult] : classes)
        for (const auto& irr : factor_squarefree_tower(tower, cls))
            roots.push_back({FactorEntry::What::root, mult, irr});
    if (roots.empty()) {
        out.ok = true;
        return out;
    }
    std::sort(roots.begin(), roots.end(), factor_order);
    TowerPtr t = tower;
    std::vector<AlgNum> cs(roots.front().irr.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = roots.front().irr.coeffs()[i].lifted_to(t);
    auto [root, t2] = adjoin_root(t, UniPoly<AlgNum>(std::move(cs)));
    t = t2;

    KPoly ix, iy;
    if (w.wx < w.wy) {
        // g1 = y - root*x^wy -> y
        ix = kvar_x();
        iy = kvar_y() + KPoly::term(root, {w.wy, 0});
    } else {
        // g1 = y^wx - root*x -> x (up to unit), keeping y
        AlgNum inv = root.inv();
        ix = kvar_x().scaled(-inv) + KPoly::term(inv, {0, w.wx});
        iy = kvar_y();
    }
    out.germ = compose(lift_poly(f, t), lift_poly(ix, t), lift_poly(iy, t));
    out.steps.push_back({TransformStep::Kind::elementary, lift_poly(ix, t), lift_poly(iy, t), -1, {}});
    out.changed = true;
    out.ok = true;
    return out;
}

namespace {

// non-degenerate saturation plus the normalization table, with the paper's
// exception for smooth facets meeting a coordinate axis; the standard-weight
// facet is governed by the entry stage
bool facet_acceptable(const KPoly& f, const Facet& fa) {
    KPoly fj = w_slice(f, fa.w, fa.wdeg);
    auto [sat, A, B] = saturate(fj);
    UniPoly<AlgNum> u = dehomogenize(sat, fa.w);
    if (!is_squarefree(u)) return false;
    if (fa.w.wx == fa.w.wy) return true;
    bool smooth = !sat.coeff({1, 0}).is_zero() || !sat.coeff({0, 1}).is_zero();
    if (smooth && (fa.touches_x_axis() || fa.touches_y_axis())) return true;
    bool linear_roots = (fa.w.wx < fa.w.wy) ? (fa.w.wx == 1) : (fa.w.wy == 1);
    int n = 0;
    if (linear_roots)
        for (const auto& [cls, mult] : squarefree_decomposition(u)) n += cls.deg();
    if (fa.w.wx > fa.w.wy && A == 0 && n != 0) return false;
    if (fa.w.wx < fa.w.wy && B == 0 && n != 0) return false;
    return true;
}

struct Driver {
    KPoly f;
    Transformation log;
    long mu, dt;
    ClassifyOptions opts;
    long last_newton = -1;

    void log_step(TransformStep st) { log.steps.push_back(std::move(st)); }

    void elementary(const KPoly& ix, const KPoly& iy) {
        // already applied by the stage; record and truncate
        log_step({TransformStep::Kind::elementary, ix, iy, -1, {}});
        f = jet(f, dt);
        log_step({TransformStep::Kind::truncate, {}, {}, dt, {}});
        check_invariants();
    }

    void absorb(StageResult&& st) {
        f = std::move(st.germ);
        for (auto& step : st.steps) log_step(std::move(step));
        if (st.changed) {
            f = jet(f, dt);
            log_step({TransformStep::Kind::truncate, {}, {}, dt, {}});
        }
        check_invariants();
    }

    void pad(Mon m) {
        KPoly term = KPoly::term(AlgNum(1L), m);
        f = f + term;
        log_step({TransformStep::Kind::add_term, {}, {}, -1, term});
        check_invariants();
    }

    void check_invariants() {
        if (opts.assert_mu_invariant && is_rational_poly(f)) {
            auto wnd = analyze_local_ideal({to_rational_poly(f).dx(), to_rational_poly(f).dy()});
            if (!wnd.finite() || wnd.dimension() != mu)
                throw std::logic_error("classify: Milnor number not preserved by a step");
        }
    }

    void note_newton() {
        if (!opts.assert_newton_monotone) return;
        if (!is_convenient(f)) return;
        long n = newton_number_of(newton_polygon(f));
        if (last_newton >= 0 && n < last_newton)
            throw std::logic_error("classify: Newton number decreased");
        last_newton = n;
    }
};

}  // namespace

ClassifyOutcome classify_newton_boundary(const QPoly& f0, const ClassifyOptions& opts) {
    ClassifyOutcome out;
    if (f0.is_zero() || !f0.coeff({0, 0}).is_zero())
        throw std::domain_error("classify: germ must vanish at the origin");
    if (corank(f0) != 2) throw std::domain_error("classify: corank 2 required");

    // exact dimension/determinacy of the input ideal (Macaulay window)
    auto jac = analyze_local_ideal({f0.dx(), f0.dy()});
    if (!jac.finite()) throw std::domain_error("classify: infinite Milnor number");
    long mu = jac.dimension();
    long dt = mu + 1;
    {
        std::vector<QPoly> m2j;
        for (const auto& p : {f0.dx(), f0.dy()})
            for (Mon m : {Mon{2, 0}, Mon{1, 1}, Mon{0, 2}})
                if (!p.is_zero()) m2j.push_back(p.mul_mon(m));
        auto w2 = analyze_local_ideal(m2j);
        if (w2.finite()) {
            for (long k = 1; k <= mu + 1; ++k) {
                bool all = true;
                for (long i = 0; i <= k + 1 && all; ++i) all = w2.contains_monomial({i, k + 1 - i});
                if (all) {
                    dt = k;
                    break;
                }
            }
        }
    }

    Driver drv{lift_poly(jet(f0, dt)), {}, mu, dt, opts};
    drv.log_step({TransformStep::Kind::truncate, {}, {}, dt, {}});

    // ---- standard-jet stage
    {
        StageResult st = normalize_standard_jet(drv.f);
        if (!st.ok) {
            out.failure = st.failure;
            return out;
        }
        drv.absorb(std::move(st));
    }

    // ---- main loop over vertices
    long d = drv.f.ord();
    std::vector<Mon> S0, S1;
    {
        auto poly = newton_polygon(drv.f);
        KPoly jd = jet(drv.f, d);
        for (const auto& [m, c] : jd.terms())
            if (poly.is_vertex(m)) S0.push_back(m);
    }
    auto lex_less = [](const Mon& p, const Mon& q) {
        return p.i != q.i ? p.i < q.i : p.j < q.j;
    };
    auto in_set = [&](const std::vector<Mon>& v, const Mon& m) {
        return std::find(v.begin(), v.end(), m) != v.end();
    };

    for (long iter = 0;; ++iter) {
        if (iter > opts.max_iterations)
            throw std::runtime_error("classify: iteration limit exceeded");
        if (!newton_polygon(drv.f).touches_x_axis()) drv.pad({mu + 2, 0});
        if (!newton_polygon(drv.f).touches_y_axis()) drv.pad({0, mu + 2});
        drv.note_newton();
        NewtonPolygon poly = newton_polygon(drv.f);
        bool all_good = true;
        for (const auto& fa : poly.facets())
            if (!facet_acceptable(drv.f, fa)) {
                all_good = false;
                break;
            }
        if (all_good) break;

        // pick the lexicographically smallest unprocessed vertex
        std::vector<Mon> candidates;
        for (const auto& m : S0)
            if (poly.is_vertex(m)) candidates.push_back(m);
        if (candidates.empty()) {
            // reseed from a bad facet (bookkeeping fallback)
            for (const auto& fa : poly.facets())
                if (!facet_acceptable(drv.f, fa)) {
                    candidates.push_back(fa.a);
                    break;
                }
        }
        std::sort(candidates.begin(), candidates.end(), lex_less);
        Mon m = candidates.front();

        for (int idx = 0;; ++idx) {
            auto adj = newton_polygon(drv.f).facets_adjacent_to(m);
            if (idx >= (int)adj.size()) break;
            long guard = 0;
            while (true) {
                if (++guard > opts.max_iterations)
                    throw std::runtime_error("classify: facet loop limit exceeded");
                auto adj_now = newton_polygon(drv.f).facets_adjacent_to(m);
                if (idx >= (int)adj_now.size()) break;
                Facet fa = adj_now[idx];
                if (fa.w.wx == fa.w.wy) break;  // entry stage owns the standard facet
                if (facet_acceptable(drv.f, fa)) break;
                StageResult st = normalize_facet(drv.f, fa.w);
                if (!st.ok) {
                    out.failure = st.failure;
                    return out;
                }
                if (!st.changed) break;  // acceptable modulo exemptions
                drv.absorb(std::move(st));
            }
        }

        S1.push_back(m);
        NewtonPolygon after = newton_polygon(drv.f);
        KPoly f1;
        for (const auto& fa : after.facets_adjacent_to(m)) f1 = f1 + w_slice(drv.f, fa.w, fa.wdeg);
        std::vector<Mon> next_S0;
        for (const auto& v : S0)
            if (!in_set(S1, v) && after.is_vertex(v) && !in_set(next_S0, v)) next_S0.push_back(v);
        for (const auto& [mm, c] : f1.terms())
            if (!in_set(S1, mm) && after.is_vertex(mm) && !in_set(next_S0, mm)) next_S0.push_back(mm);
        S0 = std::move(next_S0);
    }

    // ---- final sweep: smooth facets meeting an axis move out to mu+2
    auto sweep_side = [&](bool x_side) {
        long guard = 0;
        while (true) {
            if (++guard > opts.max_iterations)
                throw std::runtime_error("classify: sweep limit exceeded");
            NewtonPolygon poly = newton_polygon(drv.f);
            if (!poly.has_facets()) break;
            if (x_side ? !poly.touches_x_axis() : !poly.touches_y_axis()) break;
            Facet fa = x_side ? poly.facets().back() : poly.facets().front();
            if (!(x_side ? fa.touches_x_axis() : fa.touches_y_axis())) break;
            KPoly fj = w_slice(drv.f, fa.w, fa.wdeg);
            auto [sat, A, B] = saturate(fj);
            bool smooth = !sat.coeff({1, 0}).is_zero() || !sat.coeff({0, 1}).is_zero();
            if (!smooth) break;
            long intercept = x_side ? fa.b.i : fa.a.j;
            if (intercept > dt) break;  // canonical padding position
            if (fj.size() != 2) break;  // lattice length 1: exactly two terms
            // jet = c1*axis^l + c2*axis^s*other: eliminate the pure power
            AlgNum c1 = x_side ? fj.coeff({intercept, 0}) : fj.coeff({0, intercept});
            Mon other = x_side ? fa.a : fa.b;
            AlgNum c2 = fj.coeff(other);
            if (c1.is_zero() || c2.is_zero()) break;
            AlgNum cc = -(c1 / c2);
            KPoly ix, iy;
            if (x_side) {
                ix = kvar_x();
                iy = kvar_y() + KPoly::term(cc, {intercept - other.i, 0});
            } else {
                ix = kvar_x() + KPoly::term(cc, {0, intercept - other.j});
                iy = kvar_y();
            }
            TowerPtr t = poly_tower(drv.f, poly_tower(ix, poly_tower(iy)));
            drv.f = compose(lift_poly(drv.f, t), lift_poly(ix, t), lift_poly(iy, t));
            drv.elementary(lift_poly(ix, t), lift_poly(iy, t));
        }
        NewtonPolygon poly = newton_polygon(drv.f);
        if (x_side ? !poly.touches_x_axis() : !poly.touches_y_axis())
            drv.pad(x_side ? Mon{mu + 2, 0} : Mon{0, mu + 2});
    };
    sweep_side(true);
    sweep_side(false);

    out.ok = true;
    out.germ = drv.f;
    out.polygon = newton_polygon(drv.f);
    out.log = std::move(drv.log);
    out.log.tower = poly_tower(out.germ);
    out.mu = mu;
    out.determinacy = dt;
    return out;
}

QPoly apply_and_truncate(const QPoly& f, const QPoly& image_x, const QPoly& image_y, long k) {
    long dtf = determinacy_bound(f);
    if (k < dtf) throw std::domain_error("apply_and_truncate: bound below the determinacy");
    return jet(substitute(f, image_x, image_y), k);
}

bool mirror_is_canonical(const NewtonPolygon& p) {
    const auto& v = p.vertices();
    auto m = p.mirrored();
    const auto& w = m.vertices();
    for (size_t k = 0; k < std::min(v.size(), w.size()); ++k) {
        if (w[k].i != v[k].i) return w[k].i < v[k].i;
        if (w[k].j != v[k].j) return w[k].j < v[k].j;
    }
    return w.size() < v.size();
}

}  // namespace germ
