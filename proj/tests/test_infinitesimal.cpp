#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nok/errors.hpp"
#include "nok/infinitesimal.hpp"
#include "nok/positivity.hpp"
#include "nok/zariski.hpp"

#include "helpers.hpp"

using namespace nok;

TEST_CASE("blow-up of the plane at a plain point") {
    SurfaceModel p2 = load_data_model("p2.model");
    BlowUpModel bm = blow_up(p2, "x");
    CHECK(bm.exceptional == "E");
    CHECK(bm.prime.rank() == 2);
    CHECK(bm.prime.canonical == parse_divisor("-3H+E", bm.prime));
    CHECK(bm.pullback(parse_divisor("2H", p2)) == parse_divisor("2H", bm.prime));
    // x is not on the cubic, so its transform keeps class and genus
    CHECK(bm.proper_transform("C") == parse_divisor("3H", bm.prime));
    CHECK(*bm.prime.find_curve("C'")->genus == 1);
    CHECK(validate_model(bm.prime).ok());

    // a double point drops the class by 2E and the genus by 1
    BlowUpModel at_node = blow_up(p2, "xc");
    CHECK(at_node.proper_transform("C") == parse_divisor("3H-2E", at_node.prime));
    CHECK(*at_node.prime.find_curve("C'")->genus == 0);
    CHECK(validate_model(at_node.prime).ok());

    CHECK_THROWS_AS(blow_up(p2, "nowhere"), DomainError);
}

TEST_CASE("blow-up renames the exceptional class when E is taken") {
    SurfaceModel rem = load_data_model("rem2.model");
    BlowUpModel bm = blow_up(rem, "x");
    CHECK(bm.exceptional == "E_x");
    CHECK(bm.proper_transform("E") == parse_divisor("E-E_x", bm.prime));
    CHECK(bm.proper_transform("C") == parse_divisor("3H-2E-E_x", bm.prime));
    CHECK(bm.prime.canonical == parse_divisor("-3H+E+E_x", bm.prime));
    CHECK(validate_model(bm.prime).ok());
}

TEST_CASE("blow-up of the self-product at the origin") {
    SurfaceModel cxc = load_data_model("cxc_abelian.model");
    BlowUpModel bm = blow_up(cxc, "o");
    CHECK(bm.prime.rank() == 4);
    CHECK(bm.prime.canonical == parse_divisor("E", bm.prime));
    for (const std::string name : {"F1", "F2", "Delta"}) {
        CHECK(bm.proper_transform(name) == parse_divisor(name + "-E", bm.prime));
        CHECK(*bm.prime.find_curve(name + "'")->genus == 1);
    }
    CHECK(!bm.prime.abelian);
    CHECK(validate_model(bm.prime).ok());
}

TEST_CASE("standard triangle for a line through a plane point") {
    SurfaceModel p2 = load_data_model("p2.model");
    NOPolygon poly = infinitesimal_polygon(p2, parse_divisor("H", p2), "x");
    CHECK(poly.nu == 0);
    CHECK(poly.mu == QuadraticNumber(1));
    CHECK(polygon_vertices(poly) ==
          std::vector<Point2>{{QuadraticNumber(0), QuadraticNumber(0)},
                              {QuadraticNumber(1), QuadraticNumber(0)},
                              {QuadraticNumber(1), QuadraticNumber(1)}});
    CHECK(polygon_area(poly) == QuadraticNumber(Rational(1, 2)));
    CHECK(largest_inverted_simplex(poly) == QuadraticNumber(1));
}

TEST_CASE("sqrt-2 triangle at a plain point of the self-product") {
    SurfaceModel cxc = load_data_model("cxc_abelian.model");
    DivisorClass D = parse_divisor("F1+F2", cxc);
    NOPolygon poly = infinitesimal_polygon(cxc, D, "w");
    QuadraticNumber root2(Rational(0), Rational(1), Integer(2));
    CHECK(poly.mu == root2);
    CHECK(poly.radicand == 2);
    CHECK(largest_inverted_simplex(poly) == root2);
    CHECK(QuadraticNumber(2) * polygon_area(poly) == QuadraticNumber(volume(cxc, D)));
    CHECK(seshadri(cxc, D, "w") == root2);
}

TEST_CASE("inverted simplex is zero without the origin") {
    SurfaceModel two = load_data_model("two_point_blowup.model");
    FlagSpec flag;
    flag.curve = "Gamma";
    NOPolygon poly = no_polygon(two, parse_divisor("3H-2E1-2E2", two), flag);
    CHECK(poly.nu == 1);
    CHECK(largest_inverted_simplex(poly) == QuadraticNumber(0));
}

TEST_CASE("seshadri constants") {
    SurfaceModel p2 = load_data_model("p2.model");
    CHECK(seshadri(p2, parse_divisor("H", p2), "x") == QuadraticNumber(1));
    // at the double point of the cubic the curve ratio 3/2 loses to sqrt(H^2) = 1
    CHECK(seshadri(p2, parse_divisor("H", p2), "xc") == QuadraticNumber(1));
    CHECK(seshadri(p2, parse_divisor("2H", p2), "xc") == QuadraticNumber(2));

    SurfaceModel cxc = load_data_model("cxc_abelian.model");
    CHECK(seshadri(cxc, parse_divisor("4F1+3F2+2Delta", cxc), "o") == QuadraticNumber(5));

    CHECK_THROWS_AS(seshadri(cxc, parse_divisor("F1-F2", cxc), "o"), NotAmple);
    CHECK_THROWS_AS(seshadri(cxc, parse_divisor("F1+F2", cxc), "missing"), DomainError);

    SurfaceModel two = load_data_model("two_point_blowup.model");
    // nef but not big: every point sits in the augmented base locus
    CHECK_THROWS_AS(seshadri(two, parse_divisor("H-E1", two), "xGamma"), PointInAugmentedBase);
    // nef and big, but Gamma lies in B+ and passes through xGamma
    CHECK_THROWS_AS(seshadri(two, parse_divisor("2H-E1-E2", two), "xGamma"), PointInAugmentedBase);
    // ample reference at the Gamma point: Gamma computes (3H-E1-E2).Gamma = 1
    CHECK(seshadri(two, parse_divisor("3H-E1-E2", two), "xGamma") == QuadraticNumber(1));
}

TEST_CASE("lambda region check") {
    SurfaceModel cxc = load_data_model("cxc_abelian.model");
    LambdaRegionReport r = lambda_region_check(cxc, parse_divisor("5/2 F1 + 5/2 F2", cxc), "w");
    CHECK(r.region_ok);
    CHECK(r.slice2 == QuadraticNumber(2));
    CHECK(r.slice2_in_range);
    CHECK(r.verdict == "singular-divisor-exists (model-conditional)");

    SurfaceModel p2 = load_data_model("p2.model");
    LambdaRegionReport small = lambda_region_check(p2, parse_divisor("H", p2), "x");
    CHECK(!small.region_ok);
    CHECK(small.slice2 == QuadraticNumber(0));
    CHECK(!small.slice2_in_range);
    CHECK(small.verdict == "no-conclusion");

    CHECK_THROWS_AS(lambda_region_check(cxc, parse_divisor("F1-F2", cxc), "w"), NotAmple);
}

TEST_CASE("upper bound from a failed region check") {
    SurfaceModel prod = load_data_model("product_cxc.model");
    DivisorClass B = parse_divisor("F1+5F2", prod);
    InfinitesimalPoint z;
    z.generic = false;
    z.ord_on_E = {{"F2", 1}};
    auto bound = seshadri_upper_from_region(prod, B, "o", z);
    REQUIRE(bound.has_value());
    CHECK(*bound == QuadraticNumber(Rational(5, 2), Rational(-1, 2), Integer(5)));

    // at a generic infinitesimal point the region is nonempty: no bound
    CHECK(!seshadri_upper_from_region(prod, B, "o", InfinitesimalPoint::generic_point()).has_value());

    CHECK_THROWS_AS(seshadri_upper_from_region(prod, parse_divisor("F1+2F2", prod), "o", z), DomainError);
}

TEST_CASE("infinitesimal polygons sit inside the inverted wedge") {
    std::mt19937 rng(43);
    for (const std::string file : {"p2.model", "rem2.model", "two_point_blowup.model", "cxc_abelian.model"}) {
        SurfaceModel m = load_data_model(file);
        int cases = 0, guard = 0;
        while (cases < 25 && ++guard < 4000) {
            DivisorClass d = random_class(rng, m.rank(), 0, 6);
            if (!is_big(m, d)) continue;
            for (const auto& pt : m.points) {
                NOPolygon poly;
                try {
                    poly = infinitesimal_polygon(m, d, pt.name);
                } catch (const NotBig&) {
                    continue;
                }
                for (const auto& [t, y] : polygon_vertices(poly)) {
                    CHECK(QuadraticNumber(0) <= y);
                    CHECK(y <= t);
                    CHECK(t <= poly.mu);
                }
            }
            ++cases;
        }
        CHECK(cases == 25);
    }
}

TEST_CASE("very general double point: polygon fits under the cap") {
    SurfaceModel vg = load_data_model("very_general.model");
    DivisorClass L = parse_divisor("3H-E", vg);
    // the double point on C computes the constant: L.C/2 = 5/2 < sqrt(L^2) = sqrt(8)
    QuadraticNumber eps = seshadri(vg, L, "v");
    CHECK(eps == QuadraticNumber(Rational(5, 2)));

    NOPolygon poly = infinitesimal_polygon(vg, L, "v");
    CHECK(poly.mu == QuadraticNumber(3));
    std::vector<Point2> verts = polygon_vertices(poly);
    CHECK(verts == std::vector<Point2>{{QuadraticNumber(0), QuadraticNumber(0)},
                                       {QuadraticNumber(3), QuadraticNumber(0)},
                                       {QuadraticNumber(3), QuadraticNumber(1)},
                                       {QuadraticNumber(Rational(5, 2)), QuadraticNumber(Rational(5, 2))}});
    CHECK(QuadraticNumber(2) * polygon_area(poly) == QuadraticNumber(volume(vg, L)));

    // eps = p/q = 5/2: the polygon lies in the triangle O, (5/2, 5/2), (5, 0),
    // i.e. under the line y = 5 - t in addition to 0 <= y <= t
    CHECK(vg.find_point("v")->very_general);
    for (const auto& [t, y] : verts) {
        CHECK(QuadraticNumber(0) <= y);
        CHECK(y <= t);
        CHECK(y <= QuadraticNumber(5) - t);
    }
}
