#include <cmath>
#include <random>

#include "doctest.h"
#include "polypol/canonical.hpp"

using namespace polypol;

namespace {

const QPoly2 X = QPoly2::x();
const QPoly2 Y = QPoly2::y();
const QPoly2 ONE(Rational(1));

bool contains(const std::vector<QPoly2>& fs, const QPoly2& f) {
    for (const auto& g : fs)
        if (proportional(g, f)) return true;
    return false;
}

bool has_point(const ResidualAnalysis& ra, const ExactProjPoint& q) {
    for (const auto& p : ra.points)
        if (p.exact && *p.exact == q) return true;
    return false;
}

// Two discs of radius 5 centred at (0,0) and (6,0); corners (3,±4).
Polypol lens() {
    QPoly1 t = QPoly1::identity(), one = QPoly1::constant(Rational(1));
    QPoly1 den = one + t * t;
    RatFunc1 c1x(Rational(5) * (one - t * t), den), c1y(Rational(10) * t, den);
    RatFunc1 c2x(Rational(6) * den - Rational(5) * (one - t * t), den), c2y(Rational(-10) * t, den);
    return Polypol({RationalArc(c1x, c1y, Rational(-1, 2), Rational(1, 2)),
                    RationalArc(c2x, c2y, Rational(-1, 2), Rational(1, 2))});
}

Polypol random_triangle(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-9, 9);
    for (;;) {
        std::vector<Point2> v;
        for (int k = 0; k < 3; ++k) v.push_back({Rational(d(rng), 3), Rational(d(rng), 4)});
        Rational cross = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x);
        if (cross.sign() == 0) continue;
        if (cross.sign() < 0) std::swap(v[1], v[2]);
        return polygon(v);
    }
}

}  // namespace

TEST_CASE("boundary equations of the basic examples") {
    auto hd = boundary_equation(upper_half_disk());
    CHECK(hd.size() == 2);
    CHECK(contains(hd, Y));
    CHECK(contains(hd, ONE - X * X - Y * Y));

    auto sq = boundary_equation(square());
    CHECK(sq.size() == 4);
    for (const auto& f : {ONE - X, ONE + X, ONE - Y, ONE + Y}) CHECK(contains(sq, f));

    auto tr = boundary_equation(standard_triangle());
    CHECK(tr.size() == 3);
    for (const auto& f : {X, Y, ONE - X - Y}) CHECK(contains(tr, f));

    // split circle arcs collapse to one component
    auto disk = boundary_components(unit_disk());
    CHECK(disk.factors.size() == 1);
    CHECK(disk.degree() == 2);

    for (const auto& f : boundary_equation(hexagon())) CHECK(f.first_term().second.sign() > 0);
}

TEST_CASE("residual points and Bezout bookkeeping") {
    auto sq = square();
    auto ra = residual_points(boundary_equation(sq), sq.vertices());
    CHECK(ra.points.size() == 2);
    CHECK(has_point(ra, {Rational(1), Rational(0), Rational(0)}));
    CHECK(has_point(ra, {Rational(0), Rational(1), Rational(0)}));
    CHECK(ra.counts.size() == 6);
    CHECK(ra.balanced());
    int at_vertices = 0;
    for (const auto& c : ra.counts) at_vertices += c.at_vertices;
    CHECK(at_vertices == 4);

    auto hd = upper_half_disk();
    auto rh = residual_points(boundary_equation(hd), hd.vertices());
    CHECK(rh.points.empty());
    CHECK(rh.balanced());
    CHECK(rh.counts[0].at_vertices == 2);

    auto tr = standard_triangle();
    auto rt = residual_points(boundary_equation(tr), tr.vertices());
    CHECK(rt.points.empty());
    CHECK(rt.balanced());

    CHECK_THROWS_AS(residual_points({X, Rational(2) * X}, {}), std::invalid_argument);
}

TEST_CASE("complex residual points come in conjugate pairs") {
    Polypol p = lens();
    REQUIRE(validate(p).ok());
    auto fs = boundary_equation(p);
    REQUIRE(fs.size() == 2);
    auto ra = residual_points(fs, p.vertices());
    CHECK(ra.balanced());
    CHECK(ra.counts[0].at_vertices == 2);
    REQUIRE(ra.points.size() == 2);
    // the circular points [1 : ±i : 0]
    int plus = 0, minus = 0;
    for (const auto& q : ra.points) {
        CHECK(!q.exact);
        CHECK(std::abs(q.point[2]) < 1e-12);
        auto ratio = q.point[1] / q.point[0];
        if (std::abs(ratio - std::complex<double>(0, 1)) < 1e-9) ++plus;
        if (std::abs(ratio - std::complex<double>(0, -1)) < 1e-9) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
    Adjoint a = adjoint_curve(p);
    CHECK(!a.exact);
    CHECK(a.numerator == ONE);
    CHECK(a.residual < 1e-10);
}

TEST_CASE("adjoint curves") {
    CHECK(adjoint(standard_triangle()) == ONE);
    CHECK(adjoint(upper_half_disk()) == ONE);
    Adjoint sq = adjoint_curve(square());
    CHECK(sq.degree == 1);
    CHECK(sq.exact);
    CHECK(sq.numerator == ONE);
    CHECK_THROWS_AS(adjoint(unit_disk()), std::invalid_argument);

    // hexagon: cubic through the nine residual points
    Adjoint hx = adjoint_curve(hexagon());
    CHECK(hx.degree == 3);
    CHECK(hx.points.points.size() == 9);
    CHECK(hx.points.balanced());
    CHECK(hx.residual < 1e-15);
    for (const auto& q : hx.points.points) {
        REQUIRE(q.exact);
        CHECK(hx.numerator.eval_homogeneous<Rational>((*q.exact)[0], (*q.exact)[1], (*q.exact)[2], 3).is_zero());
    }
}

TEST_CASE("sector adjoint is the line through the antipodes of its corners") {
    for (auto [t0, t1] : {std::pair{Rational(1, 3), Rational(2)}, std::pair{Rational(1, 4), Rational(3)}}) {
        Polypol p = sector_tau(t0, t1);
        auto corner = [](const Rational& t) {
            Rational d = Rational(1) + t * t;
            return Point2{(Rational(1) - t * t) / d, Rational(2) * t / d};
        };
        Point2 a = corner(t0), b = corner(t1);
        // line through (−a) and (−b): (y + a_y)(b_x − a_x) − (x + a_x)(b_y − a_y)
        QPoly2 expect = (Y + QPoly2(a.y)) * (b.x - a.x) - (X + QPoly2(a.x)) * (b.y - a.y);
        CHECK(proportional(adjoint(p), expect));
    }
}

TEST_CASE("L-shaped hexagon: triple points at infinity") {
    Polypol p = polygon({{Rational(0), Rational(0)},
                         {Rational(2), Rational(0)},
                         {Rational(2), Rational(1)},
                         {Rational(1), Rational(1)},
                         {Rational(1), Rational(2)},
                         {Rational(0), Rational(2)}});
    Adjoint a = adjoint_curve(p);
    CHECK(a.points.balanced());
    CHECK(a.degree == 3);
    // residual finite points (1,0), (0,1), (2,2)
    for (auto [x, y] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 2}})
        CHECK(a.numerator(Rational(x), Rational(y)).is_zero());
}

TEST_CASE("canonical forms of the basic examples") {
    auto tri = canonical_form(standard_triangle());
    REQUIRE(tri.kappa.exact);
    CHECK(*tri.kappa.exact == Rational(1));
    CHECK(tri.numerator == ONE);

    auto sq = canonical_form(square());
    CHECK(*sq.kappa.exact == Rational(4));
    QPoly2 b(Rational(1));
    for (const auto& f : sq.denominator_factors) b = b * f;
    CHECK(b == (ONE - X * X) * (ONE - Y * Y));

    auto hd = canonical_form(upper_half_disk());
    CHECK(*hd.kappa.exact == Rational(2));
    QPoly2 bh(Rational(1));
    for (const auto& f : hd.denominator_factors) bh = bh * f;
    CHECK(bh == Y * (ONE - X * X - Y * Y));

    CHECK_THROWS_AS(canonical_form(unit_disk()), std::runtime_error);
}

TEST_CASE("iterated residues are ±1 and match the contour integral") {
    for (const char* name : {"triangle", "square", "half-disk", "hexagon", "rectangle:3,1/2", "sector-tau:1/3,2"}) {
        Polypol p = builder_by_name(name);
        auto form = canonical_form(p);
        for (const auto& v : p.genuine_vertices()) {
            Number r = iterated_residue(form, v);
            REQUIRE(r.exact);
            CHECK((*r.exact == Rational(1) || *r.exact == Rational(-1)));
            auto c = iterated_residue_contour(form, v);
            CHECK(std::abs(c - std::complex<double>(r.value)) < 1e-6);
        }
    }
    auto form = canonical_form(lens());
    for (const auto& v : lens().genuine_vertices()) {
        Number r = iterated_residue(form, v);
        CHECK(std::abs(std::abs(r.value) - 1.0) < 1e-9);
        CHECK(std::abs(iterated_residue_contour(form, v) - std::complex<double>(r.value)) < 1e-6);
    }
}

TEST_CASE("half-disk residue along the diameter") {
    auto form = canonical_form(upper_half_disk());
    // Res_{y=0} κ/(y(1−x²−y²)) dx∧dy = κ dx/(1−x²)
    RatFunc1 onedim(QPoly1::constant(*form.kappa.exact), QPoly1{Rational(1), Rational(0), Rational(-1)});
    CHECK(onedim == RatFunc1(QPoly1::constant(Rational(2)), QPoly1{Rational(1), Rational(0), Rational(-1)}));
    CHECK(onedim.residue_at(Rational(-1)) == Rational(1));
    CHECK(onedim.residue_at(Rational(1)) == Rational(-1));
}

TEST_CASE("triangle canonical forms are affine images of the standard one") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        Polypol p = random_triangle(rng);
        auto v = p.polygon_vertices();
        auto form = canonical_form(p);
        CHECK(form.numerator.is_constant());
        // barycentric coordinates λ1, λ2 (λ3 = 1 − λ1 − λ2) of the affine map onto the standard triangle
        Rational det = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x);
        auto lambda = [&](const Rational& x, const Rational& y) {
            Rational l1 = ((x - v[0].x) * (v[2].y - v[0].y) - (y - v[0].y) * (v[2].x - v[0].x)) / det;
            Rational l2 = ((v[1].x - v[0].x) * (y - v[0].y) - (v[1].y - v[0].y) * (x - v[0].x)) / det;
            return std::pair{l1, l2};
        };
        Rational jac = Rational(1) / det;  // ∂(λ1, λ2)/∂(x, y)
        for (int k = 0; k < 5; ++k) {
            Rational x(d(rng), 7), y(d(rng), 11);
            auto [l1, l2] = lambda(x, y);
            Rational l3 = Rational(1) - l1 - l2;
            if (l1.is_zero() || l2.is_zero() || l3.is_zero()) continue;
            Rational expect = jac / (l1 * l2 * l3);
            Rational den(1);
            for (const auto& f : form.denominator_factors) den *= f(x, y);
            Rational got = *form.kappa.exact * form.numerator(x, y) / den;
            CHECK(got == expect);
        }
    }
}

TEST_CASE("serialization of canonical data") {
    auto j = canonical_form(square()).to_json();
    CHECK(j["kappa"] == "4");
    CHECK(j["factors"].size() == 4);
    auto r = residual_points(boundary_equation(square()), square().vertices()).to_json();
    CHECK(r["points"].size() == 2);
    CHECK(r["bezout"].size() == 6);
}
