#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/localalg.hpp"
#include "germ/whfactor.hpp"

using namespace germ;

namespace {

QPoly qp(std::initializer_list<std::tuple<long, long, long>> ts) {
    QPoly f;
    for (auto& [c, i, j] : ts) f.add_term({i, j}, Rat(c));
    return f;
}

KPoly kp(std::initializer_list<std::tuple<long, long, long>> ts) {
    KPoly f;
    for (auto& [c, i, j] : ts) f.add_term({i, j}, AlgNum(c));
    return f;
}

UniPoly<Rat> uq(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly<Rat>(std::move(v));
}

}  // namespace

TEST_CASE("dehomogenize worked examples") {
    // x^4 + a x^2 y^2 + y^4 with a=7 and w=(1,1) -> 1 + 7 t^2 + t^4
    QPoly f = qp({{1, 4, 0}, {7, 2, 2}, {1, 0, 4}});
    auto u = dehomogenize(f, Weight{1, 1});
    CHECK(u == uq({1, 0, 7, 0, 1}));

    // x^2 + y^3 with w=(3,2): x^2 -> 1, y^3 -> t
    CHECK(dehomogenize(qp({{1, 2, 0}, {1, 0, 3}}), Weight{3, 2}) == uq({1, 1}));

    // 4x^2 + xy + y^2 with w=(1,1) -> 4 + t + t^2
    CHECK(dehomogenize(qp({{4, 2, 0}, {1, 1, 1}, {1, 0, 2}}), Weight{1, 1}) == uq({4, 1, 1}));

    CHECK_THROWS(dehomogenize(qp({{1, 2, 0}, {1, 0, 2}, {1, 1, 0}}), Weight{1, 1}));
}

TEST_CASE("homogenize inverts dehomogenize on saturated jets") {
    QPoly f = qp({{1, 9, 0}, {-2, 6, 2}, {1, 0, 6}});  // w=(2,3): 18 = 18 = 18
    auto u = dehomogenize(f, Weight{2, 3});
    CHECK(homogenize(u, Weight{2, 3}, 3) == f);
}

TEST_CASE("multiplicity_structure over Q") {
    // (t-1)^2 (t+2): multiplicities (2, 1)
    UniPoly<AlgNum> u(std::vector<AlgNum>{AlgNum(2L), AlgNum(-3L), AlgNum(0L), AlgNum(1L)});
    // (t-1)^2(t+2) = t^3 - 3t + 2
    auto rc = multiplicity_structure(nullptr, u);
    REQUIRE(rc.size() == 2);
    int seen1 = 0, seen2 = 0;
    for (auto& c : rc) {
        CHECK(c.minimal.deg() == 1);
        if (c.multiplicity == 1) ++seen1;
        if (c.multiplicity == 2) ++seen2;
    }
    CHECK(seen1 == 1);
    CHECK(seen2 == 1);

    // t^4+t^2+1: two quadratic classes, multiplicity 1 each
    UniPoly<AlgNum> v(std::vector<AlgNum>{AlgNum(1L), AlgNum(0L), AlgNum(1L), AlgNum(0L), AlgNum(1L)});
    auto rcv = multiplicity_structure(nullptr, v);
    REQUIRE(rcv.size() == 2);
    CHECK(rcv[0].minimal.deg() == 2);
    CHECK(rcv[1].minimal.deg() == 2);

    // t^2-2: one quadratic class
    UniPoly<AlgNum> w(std::vector<AlgNum>{AlgNum(-2L), AlgNum(0L), AlgNum(1L)});
    auto rcw = multiplicity_structure(nullptr, w);
    REQUIRE(rcw.size() == 1);
    CHECK(rcw[0].minimal.deg() == 2);
    CHECK(rcw[0].multiplicity == 1);
}

TEST_CASE("multiplicities sum to the degree (property)") {
    uint64_t s = 99;
    auto rnd = [&]() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return (long)(s % 7) - 3;
    };
    for (int trial = 0; trial < 10; ++trial) {
        // product of random monics of degrees 1..2 with random multiplicities
        UniPoly<AlgNum> u = UniPoly<AlgNum>::constant(AlgNum(1L));
        int want = 0;
        for (int k = 0; k < 3; ++k) {
            int d = 1 + (k % 2);
            std::vector<AlgNum> cs(d + 1);
            cs[d] = AlgNum(1L);
            for (int i = 0; i < d; ++i) cs[i] = AlgNum(rnd());
            int mult = 1 + (int)(s % 2);
            UniPoly<AlgNum> irr{std::vector<AlgNum>(cs)};
            for (int q = 0; q < mult; ++q) u = u * irr;
        }
        want = u.deg();
        int got = 0;
        for (auto& c : multiplicity_structure(nullptr, u)) got += c.minimal.deg() * c.multiplicity;
        CHECK(got == want);
    }
}

TEST_CASE("WHFactorization reassembles the facet jet") {
    // jet x^2 y^2 (4x^2+xy+y^2): a=b=2, u = 4+t+t^2 squarefree
    KPoly jet = kp({{4, 4, 2}, {1, 3, 3}, {1, 2, 4}});
    WHFactorization wh(jet, Weight{1, 1});
    CHECK(wh.x_exp() == 2);
    CHECK(wh.y_exp() == 2);
    CHECK(wh.saturation_squarefree());
    CHECK(wh.n_weighted_linear() == 2);
    TowerPtr t;
    auto lf = wh.linear_factors(&t);
    REQUIRE(lf.size() == 2);
    // product x^2 y^2 * unit * (y-c1 x)(y-c2 x) == jet, unit = lc(u)
    KPoly prod = KPoly::term(wh.dehomogenized().lc(), {2, 2});
    for (auto& [g, m] : lf)
        for (int k = 0; k < m; ++k) prod = prod * lift_poly(g, t);
    CHECK(lift_poly(jet, t) == prod);
}

TEST_CASE("facet nondegeneracy") {
    QPoly f1 = qp({{1, 4, 0}, {1, 0, 4}});
    auto p1 = newton_polygon(f1);
    CHECK(is_facet_nondegenerate(f1, p1.facets()[0]));

    QPoly f2 = qp({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}});  // (x+y)^2
    auto p2 = newton_polygon(f2);
    CHECK(!is_facet_nondegenerate(f2, p2.facets()[0]));

    // every facet of the classified F's vertex polynomial is non-degenerate
    QPoly f0 = qp({{1, 4, 2}, {1, 2, 4}, {1, 0, 10}, {1, 13, 0}});
    auto p0 = newton_polygon(f0);
    for (const auto& fa : p0.facets()) CHECK(is_facet_nondegenerate(f0, fa));
}

TEST_CASE("nondegeneracy agrees with finite Milnor number of the saturation") {
    // Definition-as-oracle on engineered facet jets
    struct Case { QPoly jet; };
    std::vector<QPoly> jets = {
        qp({{1, 4, 0}, {1, 0, 4}}),                        // nondeg
        qp({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}}),             // (x+y)^2 deg
        qp({{1, 6, 0}, {1, 4, 2}, {1, 0, 6}}),             // generic even
        qp({{1, 6, 0}, {2, 3, 2}, {1, 0, 4}}),             // w=(2,3): (x^3+y^2)^2
        qp({{1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3}}),  // cubic
    };
    for (const auto& j : jets) {
        auto p = newton_polygon(j);
        if (p.facets().size() != 1) continue;
        auto [sat, a, b] = saturate(j);
        bool nd = is_facet_nondegenerate(j, p.facets()[0]);
        bool mu_finite;
        if (sat.deg() == 0) {
            mu_finite = true;  // unit saturation
        } else {
            auto md = milnor_number(sat);
            mu_finite = md.finite;
        }
        CHECK(nd == mu_finite);
    }
}

TEST_CASE("normalization condition table") {
    // jet x*y*(x+y), w=(1,1): a=1, b=1 -> true
    QPoly j1 = qp({{1, 2, 1}, {1, 1, 2}});
    auto p1 = newton_polygon(j1);
    CHECK(check_normalization(j1, p1.facets()[0]));

    // jet y^4 - x^2 = (y^2-x)(y^2+x), w=(2,1): w(x)>w(y), a=0, n=2 -> false
    QPoly j2 = qp({{1, 0, 4}, {-1, 2, 0}});
    auto p2 = newton_polygon(j2);
    REQUIRE(p2.facets()[0].w == Weight{2, 1});
    CHECK(!check_normalization(j2, p2.facets()[0]));

    // jet x^2 + y^5, w=(5,2): a=0 but n=0 -> true
    QPoly j3 = qp({{1, 2, 0}, {1, 0, 5}});
    auto p3 = newton_polygon(j3);
    REQUIRE(p3.facets()[0].w == Weight{5, 2});
    CHECK(check_normalization(j3, p3.facets()[0]));
}

TEST_CASE("smooth facet detection") {
    QPoly f = qp({{1, 2, 1}, {1, 6, 0}});  // x^2 y + x^6: sat of jet = y + x^4
    auto p = newton_polygon(f);
    CHECK(is_smooth_facet(lift_poly(f), p.facets()[0]));
    QPoly g = qp({{1, 0, 2}, {1, 5, 0}});  // y^2 + x^5: not smooth
    auto pg = newton_polygon(g);
    CHECK(!is_smooth_facet(lift_poly(g), pg.facets()[0]));
}
