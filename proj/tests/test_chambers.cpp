#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nok/chambers.hpp"
#include "nok/errors.hpp"

#include "helpers.hpp"

using namespace nok;

TEST_CASE("chamber support of explicit classes") {
    SurfaceModel two = load_data_model("two_point_blowup.model");
    CHECK(chamber_support(two, parse_divisor("6H-2E1-2E2", two)).curves.empty());
    CHECK(chamber_support(two, parse_divisor("3H-2E1-2E2", two)).curves == std::vector<std::string>{"Gamma"});
    CHECK(chamber_support(two, parse_divisor("4H+E1-E2", two)).curves == std::vector<std::string>{"E1"});
    CHECK_THROWS_AS(chamber_support(two, parse_divisor("E1-E2", two)), NotBig);
}

TEST_CASE("chamber enumeration on the small models") {
    SurfaceModel two = load_data_model("two_point_blowup.model");
    std::vector<ChamberSupport> chambers = enumerate_chambers(two);
    REQUIRE(chambers.size() == 5);
    std::set<std::string> labels;
    for (const auto& c : chambers) {
        CHECK(!c.indeterminate);
        labels.insert(c.str());
    }
    CHECK(labels == std::set<std::string>{"(nef)", "E1", "E2", "E1;E2", "Gamma"});

    SurfaceModel one = load_data_model("one_point.model");
    CHECK(enumerate_chambers(one).size() == 2);
    CHECK(enumerate_chambers(del_pezzo_model(3)).size() == 18);
}

TEST_CASE("del Pezzo minus-one-curve counts") {
    const std::size_t expected[] = {1, 3, 6, 10, 16, 27, 56, 240};
    for (int r = 1; r <= 8; ++r) CHECK(del_pezzo_model(r).curves.size() == expected[r - 1]);

    SurfaceModel dp2 = del_pezzo_model(2);
    std::set<std::string> names;
    for (const auto& c : dp2.curves) names.insert(c.name);
    CHECK(names == std::set<std::string>{"E1", "E2", "H-E1-E2"});
    CHECK(validate_model(dp2).ok());

    CHECK_THROWS_AS(del_pezzo_model(0), DomainError);
    CHECK_THROWS_AS(del_pezzo_model(9), DomainError);
}

TEST_CASE("enumeration bound is saturated") {
    // raising the degree cap must not find new classes
    CHECK(del_pezzo_model(6, 12).curves.size() == 27);
    CHECK(del_pezzo_model(8, 9).curves.size() == 240);
}

TEST_CASE("chamber counts match the clique count") {
    const std::int64_t expected[] = {2, 5, 18, 76, 393, 2764, 33645, 1501681};
    for (int r = 1; r <= 8; ++r) CHECK(count_chambers_delpezzo(r) == expected[r - 1]);
    for (int r = 1; r <= 5; ++r)
        CHECK(count_chambers_delpezzo(r) == std::int64_t(enumerate_chambers(del_pezzo_model(r)).size()));
}

TEST_CASE("every enumerated support has negative-definite Gram") {
    SurfaceModel dp4 = del_pezzo_model(4);
    for (const auto& support : enumerate_chambers(dp4)) {
        std::vector<std::size_t> idx;
        for (const auto& name : support.curves)
            for (std::size_t i = 0; i < dp4.curves.size(); ++i)
                if (dp4.curves[i].name == name) idx.push_back(i);
        REQUIRE(idx.size() == support.curves.size());
        if (!idx.empty()) CHECK(negative_definite(curve_gram(dp4, idx)));
    }
}

TEST_CASE("chamber convexity") {
    SurfaceModel two = load_data_model("two_point_blowup.model");
    std::mt19937 rng(41);
    int pairs = 0;
    std::map<std::string, DivisorClass> first_in;
    while (pairs < 150) {
        DivisorClass d = random_class(rng, 3, -4, 8);
        if (!is_big(two, d)) continue;
        ChamberSupport s = chamber_support(two, d);
        auto it = first_in.find(s.str());
        if (it == first_in.end()) {
            first_in.emplace(s.str(), d);
            continue;
        }
        DivisorClass mid = Rational(1, 2) * (d + it->second);
        CHECK(chamber_support(two, mid).str() == s.str());
        ++pairs;
    }
}

TEST_CASE("ray walks") {
    SurfaceModel one = load_data_model("one_point.model");
    DivisorClass D = parse_divisor("2H-E", one), G = parse_divisor("H-E", one);
    std::vector<RayInterval> walk = ray_chamber_walk(one, D, G);
    REQUIRE(walk.size() == 2);
    CHECK(walk[0].support.curves.empty());
    CHECK(walk[0].t_begin == QuadraticNumber(0));
    CHECK(walk[0].t_end == QuadraticNumber(1));
    CHECK(walk[1].support.curves == std::vector<std::string>{"E"});
    CHECK(walk[1].t_end == QuadraticNumber(2));
    CHECK(!walk[1].truncated);

    // ray into the ample cone: never exits, needs a probe bound
    CHECK_THROWS_AS(ray_chamber_walk(one, D, -D), UnboundedRay);
    std::vector<RayInterval> probed = ray_chamber_walk(one, D, -D, Rational(1));
    REQUIRE(probed.size() == 1);
    CHECK(probed[0].support.curves.empty());
    CHECK(probed[0].truncated);
    CHECK(probed[0].t_end == QuadraticNumber(1));

    CHECK_THROWS_AS(ray_chamber_walk(one, parse_divisor("E", one), G), NotBig);
}

TEST_CASE("staircase ray crosses rank-many chambers") {
    SurfaceModel dp4 = del_pezzo_model(4);
    DivisorClass D = parse_divisor("11H-E1-2E2-3E3-4E4", dp4);
    DivisorClass G = parse_divisor("0-E1-E2-E3-E4", dp4);
    std::vector<RayInterval> walk = ray_chamber_walk(dp4, D, G, Rational(5));
    REQUIRE(walk.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(walk[i].support.curves.size() == i);  // E1, then E1;E2, ... joining one by one
        if (i > 0) CHECK(walk[i].support.curves[i - 1] == "E" + std::to_string(i));
        CHECK(walk[i].t_begin == QuadraticNumber(Rational(int(i))));
    }
    CHECK(walk.back().truncated);
    CHECK(walk.back().t_end == QuadraticNumber(5));
}

TEST_CASE("diagonal rays meet at most two chambers") {
    for (int r = 1; r <= 5; ++r) {
        SurfaceModel dp = del_pezzo_model(r);
        DivisorClass D = dp.basis_class(0);
        DivisorClass G(dp.rank());
        for (int i = 1; i <= r; ++i) G.coords[i] = 1;
        std::vector<RayInterval> walk = ray_chamber_walk(dp, D, G);
        CHECK(walk.size() <= 2);
        CHECK(!walk.back().truncated);
    }
}

TEST_CASE("csv export") {
    SurfaceModel two = load_data_model("two_point_blowup.model");
    std::string csv = chambers_to_csv(enumerate_chambers(two));
    CHECK(csv == "(nef)\nE1\nE1;E2\nE2\nGamma\n");
}
