#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germ/newton.hpp"
#include "germ/poly.hpp"

using namespace germ;

namespace {

QPoly qp(std::initializer_list<std::tuple<long, long, long>> ts) {
    QPoly f;
    for (auto& [c, i, j] : ts) f.add_term({i, j}, Rat(c));
    return f;
}

}  // namespace

TEST_CASE("two-point hull of x^3+y^4") {
    auto p = newton_polygon(qp({{1, 3, 0}, {1, 0, 4}}));
    REQUIRE(p.vertices().size() == 2);
    CHECK(p.vertices()[0] == Mon{0, 4});
    CHECK(p.vertices()[1] == Mon{3, 0});
    REQUIRE(p.facets().size() == 1);
    CHECK(p.facets()[0].w == Weight{4, 3});
    CHECK(p.facets()[0].wdeg == 12);
}

TEST_CASE("hull drops dominated and collinear interior points") {
    // support of the classified germ's boundary: (0,10),(2,4),(4,2),(13,0)
    auto p = NewtonPolygon::from_support(
        {{0, 10}, {1, 7}, {2, 4}, {3, 3}, {4, 2}, {13, 0}, {5, 5}, {9, 1}});
    REQUIRE(p.vertices().size() == 4);
    CHECK(p.vertices()[0] == Mon{0, 10});
    CHECK(p.vertices()[1] == Mon{2, 4});
    CHECK(p.vertices()[2] == Mon{4, 2});
    CHECK(p.vertices()[3] == Mon{13, 0});
    REQUIRE(p.facets().size() == 3);
    CHECK(p.facets()[0].w == Weight{3, 1});
    CHECK(p.facets()[1].w == Weight{1, 1});
    CHECK(p.facets()[2].w == Weight{2, 9});
}

TEST_CASE("is_convenient") {
    CHECK(is_convenient(qp({{1, 3, 0}, {1, 0, 4}})));
    CHECK(!is_convenient(qp({{1, 2, 1}, {1, 0, 3}})));
    CHECK(is_convenient(qp({{1, 2, 1}, {1, 0, 3}, {1, 6, 0}})));
}

TEST_CASE("piecewise weight multipliers") {
    auto p1 = newton_polygon(qp({{1, 3, 0}, {1, 0, 4}}));
    auto w1 = p1.piecewise_weight();
    CHECK(w1.d == 12);
    REQUIRE(w1.scaled.size() == 1);
    CHECK(w1.scaled[0].second == 1);

    // facet degrees 10, 6, 26 -> lambda = (39, 65, 15), d = 390
    auto p2 = NewtonPolygon::from_support({{0, 10}, {2, 4}, {4, 2}, {13, 0}});
    auto w2 = p2.piecewise_weight();
    CHECK(w2.d == 390);
    REQUIRE(w2.scaled.size() == 3);
    CHECK(w2.scaled[0].second == 39);
    CHECK(w2.scaled[1].second == 65);
    CHECK(w2.scaled[2].second == 15);

    // equal facet degrees -> multipliers 1
    auto p3 = NewtonPolygon::from_support({{0, 6}, {2, 2}, {6, 0}});
    auto w3 = p3.piecewise_weight();
    CHECK(w3.d == 6);
    CHECK(w3.scaled[0].second == 1);
    CHECK(w3.scaled[1].second == 1);
}

TEST_CASE("facet_jet picks the on-facet terms") {
    QPoly f = qp({{1, 3, 0}, {1, 0, 4}, {1, 2, 3}});
    auto p = newton_polygon(f);
    REQUIRE(p.facets().size() == 1);
    // (2,3) has (4,3)-degree 17 > 12
    CHECK(facet_jet(f, p.facets()[0]) == qp({{1, 3, 0}, {1, 0, 4}}));
    // monomial germ: single term is its own jet on any adjacent facet
    QPoly m = qp({{1, 2, 2}, {1, 5, 0}});
    auto pm = newton_polygon(m);
    CHECK(facet_jet(m, pm.facets()[0]) == m);
    // not a facet of f: error
    Facet bogus{{0, 4}, {2, 2}, Weight{1, 1}, 4, 2};
    CHECK_THROWS(facet_jet(f, bogus));
}

TEST_CASE("newton number") {
    // x^p + y^q -> (p-1)(q-1), via exact lattice-area enumeration oracle
    for (long p = 2; p <= 6; ++p) {
        for (long q = 2; q <= 6; ++q) {
            QPoly f = qp({{1, p, 0}, {1, 0, q}});
            // oracle: 2S by counting unit squares under the segment twice (shoelace)
            long two_s = p * q;
            CHECK(newton_number(f) == two_s - p - q + 1);
            CHECK(newton_number(f) == (p - 1) * (q - 1));
        }
    }
    CHECK(newton_number(qp({{1, 2, 0}, {1, 0, 2}})) == 1);
    // classified polygon: S = 29, a = 13, b = 10 -> N = 36
    auto p2 = NewtonPolygon::from_support({{0, 10}, {2, 4}, {4, 2}, {13, 0}});
    CHECK(newton_number_of(p2) == 36);
    CHECK_THROWS(newton_number(qp({{1, 2, 1}, {1, 0, 3}})));
}

TEST_CASE("modality lattice count") {
    auto pF = NewtonPolygon::from_support({{0, 10}, {2, 4}, {4, 2}, {13, 0}});
    CHECK(modality_lattice(pF).count == 6);
    auto pX9 = NewtonPolygon::from_support({{0, 4}, {4, 0}});
    auto mc = modality_lattice(pX9);
    CHECK(mc.count == 1);
    REQUIRE(mc.witnesses.size() == 1);
    CHECK(mc.witnesses[0] == Mon{2, 2});
    auto pE6 = NewtonPolygon::from_support({{0, 4}, {3, 0}});
    CHECK(modality_lattice(pE6).count == 0);
}

TEST_CASE("classify_monomial against the boundary") {
    auto pX9 = NewtonPolygon::from_support({{0, 4}, {4, 0}});
    CHECK(classify_monomial({2, 2}, pX9) == MonPosition::on);
    CHECK(classify_monomial({1, 1}, pX9) == MonPosition::below);
    CHECK(classify_monomial({5, 3}, pX9) == MonPosition::above);
    auto pF = NewtonPolygon::from_support({{0, 10}, {2, 4}, {4, 2}, {13, 0}});
    CHECK(classify_monomial({3, 3}, pF) == MonPosition::on);
}

TEST_CASE("mirror symmetry of polygons") {
    QPoly f = qp({{1, 5, 0}, {2, 2, 1}, {3, 0, 7}});
    auto p = newton_polygon(f);
    auto pm = newton_polygon(mirror(f));
    auto mm = p.mirrored();
    CHECK(pm == mm);
}

TEST_CASE("polygon rendering matches the printed layout") {
    auto p = NewtonPolygon::from_support({{0, 10}, {2, 4}, {4, 2}, {13, 0}});
    CHECK(p.str() ==
          "vertices: [0,10], [2,4], [4,2], [13,0]\n"
          "facets: [[0,10], [2,4]], [[2,4], [4,2]], [[4,2], [13,0]]\n"
          "normals: [3,1], [1,1], [2,9]");
}
