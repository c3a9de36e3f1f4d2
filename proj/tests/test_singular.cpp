#include <chrono>
#include <cmath>

#include "doctest.h"
#include "polypol/singular.hpp"

using namespace polypol;

namespace {

const QPoly2 U = QPoly2::x();
const QPoly2 V = QPoly2::y();
const QPoly2 ONE(Rational(1));

bool has_factor(const std::vector<QPoly2>& fs, const QPoly2& f) {
    for (const auto& g : fs)
        if (proportional(g, f)) return true;
    return false;
}

std::vector<QPoly2> line_polys(const SingularSupport& s) {
    std::vector<QPoly2> out;
    for (const auto& l : s.vertex_lines) out.push_back(l.line);
    return out;
}

}  // namespace

TEST_CASE("dual conic of the unit circle") {
    Polypol disk = unit_disk();
    auto s = singular_support(disk);
    CHECK(s.vertex_lines.empty());
    REQUIRE(s.dual_curves.size() == 1);
    CHECK(proportional(s.dual_curves[0], ONE - U * U - V * V));
    for (const auto& arc : disk.arcs()) CHECK(tangency_test(s.dual_curves[0], arc, 12));
    CHECK(!tangency_test(ONE - U * U - Rational(2) * V * V, unit_disk().arcs()[0]));
}

TEST_CASE("vertex lines") {
    auto t = singular_support(standard_triangle());
    CHECK(t.dual_curves.empty());
    REQUIRE(t.vertex_lines.size() == 3);
    auto lines = line_polys(t);
    CHECK(has_factor(lines, ONE - U));
    CHECK(has_factor(lines, ONE - V));
    CHECK(has_factor(lines, ONE));
    int never = 0;
    for (const auto& l : t.vertex_lines) never += l.never_singular ? 1 : 0;
    CHECK(never == 1);
    CHECK(t.components().size() == 2);

    auto h = singular_support(upper_half_disk());
    REQUIRE(h.vertex_lines.size() == 2);
    CHECK(has_factor(line_polys(h), ONE - U));
    CHECK(has_factor(line_polys(h), ONE + U));
    REQUIRE(h.dual_curves.size() == 1);
    CHECK(proportional(h.dual_curves[0], ONE - U * U - V * V));

    auto sq = singular_support(square());
    CHECK(sq.vertex_lines.size() == 4);
    CHECK(sq.dual_curves.empty());
}

TEST_CASE("dual curves of other arcs") {
    QPoly1 t = QPoly1::identity(), one = QPoly1::constant(Rational(1));
    // ellipse (2cos, 3sin): a²u² + b²v² = 1
    RationalArc ellipse(RatFunc1(Rational(2) * (one - t * t), one + t * t), RatFunc1(Rational(6) * t, one + t * t),
                        Rational(0), Rational(1));
    auto de = dual_curve(ellipse);
    REQUIRE(de.size() == 1);
    CHECK(proportional(de[0], Rational(4) * U * U + Rational(9) * V * V - ONE));

    // parabola y = x²: tangent lines satisfy u² + 4v = 0
    RationalArc parabola(RatFunc1(t), RatFunc1(t * t), Rational(-1), Rational(2));
    auto dp = dual_curve(parabola);
    REQUIRE(dp.size() == 1);
    CHECK(proportional(dp[0], U * U + Rational(4) * V));

    // cubic y = x³: 4u³ + 27v = 0
    RationalArc cubic(RatFunc1(t), RatFunc1(t * t * t), Rational(1, 2), Rational(2));
    auto dc = dual_curve(cubic);
    REQUIRE(dc.size() == 1);
    CHECK(proportional(dc[0], Rational(4) * U * U * U + Rational(27) * V));
    CHECK(tangency_test(dc[0], cubic, 20));

    // a sector's circular arc still has the unit conic as its dual
    auto ss = singular_support(builder_by_name("sector-tau:1/4,3"));
    REQUIRE(ss.dual_curves.size() == 1);
    CHECK(proportional(ss.dual_curves[0], ONE - U * U - V * V));
}

TEST_CASE("support distance") {
    auto s = singular_support(unit_disk());
    CHECK(std::abs(support_distance(s, 2.0, 0.0).distance - 1.0) < 1e-9);
    CHECK(std::abs(support_distance(s, 0.0, 0.5).distance - 0.5) < 1e-9);
    auto t = singular_support(standard_triangle());
    auto d = support_distance(t, 0.2, 0.9);
    CHECK(std::abs(d.distance - 0.1) < 1e-12);
}

TEST_CASE("exponent probes") {
    auto disk = probe_exponent(unit_disk(), ONE - U * U - V * V, {1.0, 0.0}, {-1.0, 0.0});
    CHECK(std::abs(disk.exponent + 1.5) < 0.05);
    CHECK(disk.classification == ExponentClass::half_integral);
    CHECK(disk.samples.size() == 13);

    // off the axis: base point projected onto the conic, radial approach
    auto disk2 = probe_exponent(unit_disk(), ONE - U * U - V * V, {0.61, 0.8}, {-0.6, -0.8});
    CHECK(std::abs(disk2.exponent + 1.5) < 0.05);

    auto tri = probe_exponent(standard_triangle(), ONE - U, {1.0, 0.0}, {-1.0, 0.0});
    CHECK(std::abs(tri.exponent + 1.0) < 0.05);
    CHECK(tri.classification == ExponentClass::pole_integer);

    auto corner = probe_exponent(standard_triangle(), ONE - U, {1.0, 1.0}, {-1.0, -1.0});
    CHECK(std::abs(corner.exponent + 2.0) < 0.05);

    // a line that is not in the support
    auto off = probe_exponent(standard_triangle(), U - QPoly2(Rational(1, 5)), {0.2, 0.3}, {1.0, 1.0});
    CHECK(std::abs(off.exponent) < 0.1);
    CHECK(off.classification == ExponentClass::regular);

    // the ray leaves the domain of the integral representation
    CHECK_THROWS_AS(probe_exponent(unit_disk(), ONE - U * U - V * V, {1.0, 0.0}, {1.0, 0.0}), ProbeError);
    CHECK(disk.to_json()["classification"] == "half_integral");
}

TEST_CASE("conjecture scan containment") {
    for (const char* name : {"triangle", "half-disk", "disk", "square"}) {
        auto start = std::chrono::steady_clock::now();
        auto rep = conjecture_scan(builder_by_name(name), 101);
        auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        MESSAGE(std::string(name) << ": flagged " << rep.flagged << ", refused " << rep.refused << ", frontier "
                     << rep.frontier_near_support << "/" << rep.frontier << ", " << ms << " ms");
        CHECK(rep.points.size() == 101 * 101);
        CHECK(rep.containment());
        CHECK(rep.frontier > 0);
        CHECK(rep.frontier_near_support == rep.frontier);
    }
    auto small = conjecture_scan(standard_triangle(), 5);
    auto csv = small.to_csv();
    CHECK(csv.rfind("u,v,abs_F,flagged,nearest_component,distance,status\n", 0) == 0);
    CHECK(small.summary()["containment"] == true);
}
