#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "polypol/polypol.hpp"

using namespace polypol;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }

// star-shaped random polygon around the origin with rational vertices
std::vector<Point2> random_polygon(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> r(0.5, 2.0), jitter(-0.3, 0.3);
    std::vector<Point2> v;
    for (int k = 0; k < n; ++k) {
        double ang = 2 * std::numbers::pi * (k + 0.5 + jitter(rng)) / n;
        double rad = r(rng);
        v.push_back({rationalize(rad * std::cos(ang), 1e-3), rationalize(rad * std::sin(ang), 1e-3)});
    }
    return v;
}

Rational shoelace(const std::vector<Point2>& v) {
    Rational s(0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s / Rational(2);
}

}  // namespace

TEST_CASE("standard triangle builder") {
    Polypol t = standard_triangle();
    REQUIRE(t.arcs().size() == 3);
    for (const auto& a : t.arcs()) CHECK(a.is_segment());
    auto pv = t.polygon_vertices();
    CHECK(pv[0] == pt(0, 0));
    CHECK(pv[1] == pt(1, 0));
    CHECK(pv[2] == pt(0, 1));
    auto rep = validate(t);
    CHECK(rep.ok());
    CHECK(signed_area(t).exact == Rational(1, 2));
}

TEST_CASE("stacked segments fail distinctness") {
    std::vector<RationalArc> arcs{RationalArc::segment(pt(0, 0), pt(1, 0)), RationalArc::segment(pt(1, 0), pt(0, 0))};
    auto rep = validate(Polypol(arcs));
    REQUIRE(rep.find("distinct_boundary"));
    CHECK_FALSE(rep.find("distinct_boundary")->passed);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("reversed square fails orientation") {
    Polypol rev = square().reversed();
    std::vector<Point2> v = rev.polygon_vertices();
    CHECK(shoelace(v) == Rational(-4));
    auto rep = validate(rev);
    REQUIRE(rep.find("orientation"));
    CHECK_FALSE(rep.find("orientation")->passed);
    CHECK(rep.find("orientation")->detail == "signed area = -4");
    CHECK(signed_area(rev).exact == Rational(-4));
}

TEST_CASE("clockwise or empty polygon input is rejected") {
    CHECK_THROWS_AS(polygon({}), std::invalid_argument);
    CHECK_THROWS_AS(polygon({pt(0, 0), pt(0, 1), pt(1, 0)}), std::invalid_argument);
}

TEST_CASE("disk builders") {
    Polypol d = unit_disk();
    REQUIRE(d.arcs().size() == 4);
    auto vs = d.vertices();
    for (const auto& v : vs) CHECK(v.smooth_joint);
    CHECK(d.genuine_vertices().empty());
    CHECK(validate(d).ok());
    CHECK(std::abs(signed_area(d).value - std::numbers::pi) < 1e-12);

    Polypol h = upper_half_disk();
    CHECK(validate(h).ok());
    CHECK(std::abs(signed_area(h).value - std::numbers::pi / 2) < 1e-12);
    auto g = h.genuine_vertices();
    REQUIRE(g.size() == 2);
    CHECK(g[0].point == pt(1, 0));
    CHECK(g[1].point == pt(-1, 0));
}

TEST_CASE("sector builder") {
    Polypol s = sector(0.0, std::numbers::pi / 2);
    REQUIRE(s.arcs().size() == 3);
    CHECK(s.arcs()[0].is_segment());
    CHECK_FALSE(s.arcs()[1].is_polynomial());
    CHECK(s.arcs()[2].is_segment());
    CHECK(validate(s).ok());
    CHECK(std::abs(signed_area(s).value - std::numbers::pi / 4) < 1e-12);

    Polypol wide = sector_tau(Rational(1, 3), std::nullopt);
    CHECK(validate(wide).ok());
    double phi0 = 2 * std::atan(1.0 / 3.0);
    CHECK(std::abs(signed_area(wide).value - (std::numbers::pi - phi0) / 2) < 1e-12);
    CHECK_THROWS(sector(1.0, 0.5));
}

TEST_CASE("all builders validate") {
    for (const char* name : {"triangle", "square", "disk", "half-disk", "hexagon", "rectangle:3,1/2", "sector:0.3,2.5",
                             "sector-tau:0,inf"}) {
        CAPTURE(name);
        CHECK(validate(builder_by_name(name)).ok());
    }
}

TEST_CASE("implicitize examples") {
    QPoly2 x = QPoly2::x(), y = QPoly2::y(), one(Rational(1));
    CHECK(implicitize(RationalArc::segment(pt(0, 0), pt(1, 0))) == y);
    CHECK(implicitize(unit_disk().arcs()[0]) == one - x * x - y * y);
    CHECK(implicitize(unit_disk().arcs()[2]) == one - x * x - y * y);
    RationalArc parabola(RatFunc1(QPoly1{Rational(0), Rational(1)}), RatFunc1(QPoly1{Rational(0), Rational(0), Rational(1)}),
                         Rational(0), Rational(1));
    CHECK(proportional(implicitize(parabola), y - x * x));
    CHECK(implicitize(RationalArc::segment(pt(2, 0), pt(2, 5))) == QPoly2(Rational(2)) - x);
    RationalArc point(RatFunc1(QPoly1::constant(1)), RatFunc1(QPoly1::constant(2)), Rational(0), Rational(1));
    CHECK_THROWS_AS(implicitize(point), std::invalid_argument);
}

TEST_CASE("implicit equations vanish along the arcs") {
    for (const char* name : {"disk", "half-disk", "sector:0.2,3.0", "hexagon"}) {
        Polypol p = builder_by_name(name);
        for (const auto& arc : p.arcs()) {
            QPoly2 f = implicitize(arc);
            double scale = 0.0;
            for (const auto& [m, c] : f.terms()) scale = std::max(scale, std::abs(c.to_double()));
            auto fd = (f * Rational::from_double(1.0 / scale)).cast<double>();
            double a = arc.a().to_double(), b = arc.b().to_double();
            for (int k = 0; k < 50; ++k) {
                double x, y, xp, yp;
                arc.eval(a + (b - a) * k / 49.0, x, y, xp, yp);
                CHECK(std::abs(fd(x, y)) < 1e-10);
            }
        }
    }
}

TEST_CASE("signed area matches shoelace and flips under reversal") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto v = random_polygon(rng, 3 + trial % 6);
        Polypol p = polygon(v);
        CHECK(signed_area(p).exact == shoelace(v));
        CHECK(signed_area(p.reversed()).exact == -shoelace(v));
    }
    Polypol h = upper_half_disk();
    CHECK(std::abs(signed_area(h.reversed()).value + std::numbers::pi / 2) < 1e-12);
}

TEST_CASE("json round trip") {
    for (const char* name : {"half-disk", "square", "sector-tau:1/2,3"}) {
        Polypol p = builder_by_name(name);
        Polypol q = from_json(to_json(p));
        CHECK(to_json(q) == to_json(p));
        CHECK(q.vertices().size() == p.vertices().size());
    }
    CHECK_THROWS(from_json(nlohmann::json::parse(R"({"arcs": 3})")));
    CHECK_THROWS(from_json(nlohmann::json::parse(R"({"arcs": []})")));
}
