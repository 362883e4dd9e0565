#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/classify.hpp"
#include "germ/localalg.hpp"
#include "germ/localdim.hpp"

using namespace germ;

namespace {

QPoly qp(std::initializer_list<std::tuple<long, long, long>> ts) {
    QPoly f;
    for (auto& [c, i, j] : ts) f.add_term({i, j}, Rat(c));
    return f;
}

QPoly qpow(const QPoly& p, int n) {
    QPoly r = QPoly::constant(Rat(1));
    for (int k = 0; k < n; ++k) r = r * p;
    return r;
}

long engine_mu(const QPoly& f) {
    auto w = analyze_local_ideal({f.dx(), f.dy()});
    REQUIRE(w.finite());
    return w.dimension();
}

}  // namespace

TEST_CASE("normalize_standard_jet: one multiple factor") {
    // (x+y)^3 + y^5 -> x^3 + y^5 via x -> x-y, y -> y
    QPoly f = qpow(qp({{1, 1, 0}, {1, 0, 1}}), 3) + qp({{1, 0, 5}});
    auto st = normalize_standard_jet(lift_poly(f));
    REQUIRE(st.ok);
    CHECK(st.changed);
    CHECK(to_rational_poly(st.germ) == qp({{1, 3, 0}, {1, 0, 5}}));
}

TEST_CASE("normalize_standard_jet: two multiple factors") {
    // (x+y)^2 (x-y)^2 + x^5 -> x^2 y^2 + (terms)
    QPoly f = qpow(qp({{1, 1, 0}, {1, 0, 1}}), 2) * qpow(qp({{1, 1, 0}, {-1, 0, 1}}), 2) +
              qp({{1, 5, 0}});
    auto st = normalize_standard_jet(lift_poly(f));
    REQUIRE(st.ok);
    QPoly g = to_rational_poly(st.germ);
    // the 4-jet must be a scalar multiple of x^2 y^2
    QPoly j4 = jet(g, 4);
    auto [sat, a, b] = saturate(j4);
    CHECK(a == 2);
    CHECK(b == 2);
    CHECK(sat.deg() == 0);
    CHECK(engine_mu(f) == engine_mu(g));
}

TEST_CASE("normalize_standard_jet: three multiple factors fail") {
    QPoly f = qpow(qp({{1, 1, 0}, {1, 0, 1}}), 2) * qpow(qp({{1, 1, 0}, {-1, 0, 1}}), 2) *
                  qpow(qp({{1, 1, 0}, {2, 0, 1}}), 2) +
              qp({{1, 7, 0}});
    auto st = normalize_standard_jet(lift_poly(f));
    CHECK(!st.ok);
    CHECK(st.failure == "degenerate Newton boundary");
}

TEST_CASE("normalize_facet: (y-x^2)^2 + x^5 with w=(1,2)") {
    QPoly f = qpow(qp({{1, 0, 1}, {-1, 2, 0}}), 2) + qp({{1, 5, 0}});
    CHECK(engine_mu(f) == 4);
    auto st = normalize_facet(lift_poly(f), Weight{1, 2});
    REQUIRE(st.ok);
    CHECK(to_rational_poly(st.germ) == qp({{1, 0, 2}, {1, 5, 0}}));
    CHECK(engine_mu(to_rational_poly(st.germ)) == 4);
}

TEST_CASE("normalize_facet: two multiple weighted factors fail") {
    QPoly f = qpow(qp({{1, 0, 1}, {-1, 2, 0}}), 2) * qpow(qp({{1, 0, 1}, {-2, 2, 0}}), 2) +
              qp({{1, 9, 0}});
    auto st = normalize_facet(lift_poly(f), Weight{1, 2});
    CHECK(!st.ok);
}

TEST_CASE("normalize_facet: nondegenerate facet unchanged") {
    QPoly f = qp({{1, 0, 2}, {1, 5, 0}});
    auto st = normalize_facet(lift_poly(f), Weight{2, 5});
    REQUIRE(st.ok);
    CHECK(!st.changed);
    CHECK(to_rational_poly(st.germ) == f);
}

TEST_CASE("classify: already-normalized germ unchanged") {
    QPoly f = qp({{1, 3, 0}, {1, 0, 4}});
    auto res = classify_newton_boundary(f);
    REQUIRE(res.ok);
    CHECK(to_rational_poly(res.germ) == f);
    REQUIRE(res.polygon.vertices().size() == 2);
    CHECK(res.polygon.vertices()[0] == Mon{0, 4});
    CHECK(res.polygon.vertices()[1] == Mon{3, 0});
    CHECK(res.mu == 6);
}

TEST_CASE("classify: x^2 y + y^3 gains a smooth facet toward the x-axis") {
    QPoly f = qp({{1, 2, 1}, {1, 0, 3}});
    ClassifyOptions opts;
    opts.assert_mu_invariant = true;
    auto res = classify_newton_boundary(f, opts);
    REQUIRE(res.ok);
    CHECK(res.mu == 4);
    QPoly g = to_rational_poly(res.germ);
    CHECK(engine_mu(g) == 4);
    // convenient, with x^(mu+2) = x^6 padding the x-axis
    CHECK(is_convenient(g));
    CHECK(res.polygon.x_intercept() == 6);
    CHECK(res.polygon.y_intercept() == 3);
    // replay reproduces the output exactly
    CHECK(res.log.apply(lift_poly(f)) == res.germ);
}

TEST_CASE("classify: failure marker on engineered degenerate input") {
    QPoly f = qpow(qp({{1, 1, 0}, {1, 0, 1}}), 2) * qpow(qp({{1, 1, 0}, {-1, 0, 1}}), 2) *
                  qpow(qp({{1, 1, 0}, {2, 0, 1}}), 2) +
              qp({{1, 7, 0}}) + qp({{1, 0, 7}});
    auto res = classify_newton_boundary(f);
    CHECK(!res.ok);
    CHECK(res.failure == "degenerate Newton boundary");
}

TEST_CASE("classify preconditions") {
    CHECK_THROWS(classify_newton_boundary(qp({{1, 2, 0}, {1, 0, 3}})));  // corank 1
    CHECK_THROWS(classify_newton_boundary(qp({{1, 2, 0}})));             // corank 1
    CHECK_THROWS(classify_newton_boundary(qp({{1, 3, 0}})));             // infinite mu
}

TEST_CASE("classify: X9-type quartic stays on its polygon") {
    QPoly f = qp({{1, 4, 0}, {1, 0, 4}});
    f.add_term({3, 1}, Rat(1, 3));
    auto res = classify_newton_boundary(f);
    REQUIRE(res.ok);
    CHECK(res.mu == 9);
    REQUIRE(res.polygon.vertices().size() == 2);
    CHECK(res.polygon.vertices()[0] == Mon{0, 4});
    CHECK(res.polygon.vertices()[1] == Mon{4, 0});
}

TEST_CASE("classify: idempotence on its own output") {
    QPoly f = qp({{1, 2, 1}, {1, 0, 3}});
    auto res1 = classify_newton_boundary(f);
    REQUIRE(res1.ok);
    QPoly g = to_rational_poly(res1.germ);
    auto res2 = classify_newton_boundary(g);
    REQUIRE(res2.ok);
    CHECK(to_rational_poly(res2.germ) == g);
    CHECK(res2.polygon == res1.polygon);
}

TEST_CASE("classify across a quadratic extension") {
    // (y^2 - 2x^4)^2 + x^9: facet roots +-sqrt2 both double => degenerate
    QPoly inner = qp({{1, 0, 2}, {-2, 4, 0}});
    QPoly f = inner * inner + qp({{1, 9, 0}});
    auto res = classify_newton_boundary(f);
    CHECK(!res.ok);

    // single irrational structure stays fine
    QPoly g = inner + qp({{1, 0, 3}});
    auto res2 = classify_newton_boundary(g);
    REQUIRE(res2.ok);
    CHECK(res2.mu == engine_mu(g));
}

TEST_CASE("apply_and_truncate contract") {
    QPoly f = qp({{1, 3, 0}, {1, 0, 5}});
    CHECK(apply_and_truncate(f, QPoly::var_x(), QPoly::var_y(), 10) == f);
    // y -> y + x^7 with k=6: created terms all exceed 6
    QPoly img_y = qp({{1, 0, 1}, {1, 7, 0}});
    CHECK(apply_and_truncate(f, QPoly::var_x(), img_y, 6) == qp({{1, 3, 0}, {1, 0, 5}}));
    CHECK_THROWS(apply_and_truncate(f, QPoly::var_x(), QPoly::var_y(), 2));
}

TEST_CASE("canonical orientation flag") {
    auto p = NewtonPolygon::from_support({{0, 13}, {2, 4}, {4, 2}, {10, 0}});
    CHECK(mirror_is_canonical(p));
    auto q = NewtonPolygon::from_support({{0, 10}, {2, 4}, {4, 2}, {13, 0}});
    CHECK(!mirror_is_canonical(q));
}

TEST_CASE("golden: classify phi(g) reproduces the printed polygon") {
    QPoly x = QPoly::var_x(), y = QPoly::var_y();
    QPoly phix = x + y * y + x * x + x * y + x * x * y + x * qpow(y, 3);
    QPoly phiy =
        y + y * y + qpow(x, 2).scaled(Rat(2)) + x * y + y * x * x + y * y * x + x * qpow(y, 4);
    QPoly g = qpow(x, 2).scaled(Rat(4)) * qpow(y, 4) + qpow(x, 3) * qpow(y, 3) +
              qpow(y, 2) * qpow(x, 4) + qpow(x, 10).scaled(Rat(5)) + qpow(y, 13);
    QPoly f = compose(g, phix, phiy);
    auto res = classify_newton_boundary(f);
    REQUIRE(res.ok);
    CHECK(res.mu == 36);
    NewtonPolygon p = res.polygon;
    if (mirror_is_canonical(p)) p = p.mirrored();
    REQUIRE(p.vertices().size() == 4);
    CHECK(p.vertices()[0] == Mon{0, 10});
    CHECK(p.vertices()[1] == Mon{2, 4});
    CHECK(p.vertices()[2] == Mon{4, 2});
    CHECK(p.vertices()[3] == Mon{13, 0});
    CHECK(p.facets()[0].w == Weight{3, 1});
    CHECK(p.facets()[1].w == Weight{1, 1});
    CHECK(p.facets()[2].w == Weight{2, 9});
}
