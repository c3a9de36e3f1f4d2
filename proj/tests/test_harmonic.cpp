#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polypol/harmonic.hpp"

using namespace polypol;
using C = std::complex<double>;

namespace {

Rational fact(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

// Taylor coefficients of f at 0 from N samples on |t| = r.
std::vector<C> cauchy_coefficients(const std::function<C(C)>& f, double r, int n) {
    std::vector<C> vals(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) vals[static_cast<std::size_t>(k)] = f(std::polar(r, 2 * std::numbers::pi * k / n));
    std::vector<C> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        C s = 0.0;
        for (int k = 0; k < n; ++k)
            s += vals[static_cast<std::size_t>(k)] * std::polar(1.0, -2 * std::numbers::pi * j * k / n);
        out[static_cast<std::size_t>(j)] = s / (static_cast<double>(n) * std::pow(r, j));
    }
    return out;
}

// (i/(2t)) ∮ dz̄/(1 − tz), the boundary formula as written with the 1/t factor
C G_with_inverse_t(const Polypol& p, C t) {
    C total = 0.0;
    for (const auto& arc : p.arcs())
        total += integrate_complex(
            [&](double s) {
                double x, y, xp, yp;
                arc.eval(s, x, y, xp, yp);
                return C(xp, -yp) / (1.0 - t * C(x, y));
            },
            arc.a().to_double(), arc.b().to_double());
    return C(0, 0.5) * total / t;
}

}  // namespace

TEST_CASE("disk harmonic moments vanish beyond the area") {
    auto h = harmonic_moments(unit_disk(), 10);
    CHECK(std::abs(h.mu[0].value - std::numbers::pi) < 1e-12);
    for (int j = 1; j <= 10; ++j) CHECK(std::abs(h.mu[static_cast<std::size_t>(j)].value) < 1e-12);
    CHECK(!h.exact());
}

TEST_CASE("triangle harmonic moments from the monomial moments") {
    auto h = harmonic_moments(standard_triangle(), 8);
    REQUIRE(h.exact());
    for (int j = 0; j <= 8; ++j) {
        // z^j = Σ C(j,k) x^{j−k} (iy)^k and ∫_Δ x^a y^b = a! b!/(a+b+2)!
        GaussRational expect;
        for (int k = 0; k <= j; ++k) {
            Rational c = fact(j) / (fact(k) * fact(j - k)) * fact(j - k) * fact(k) / fact(j + 2);
            GaussRational ik(1);
            for (int q = 0; q < k; ++q) ik = ik * GaussRational(Rational(0), Rational(1));
            expect += ik * GaussRational(c);
        }
        CHECK(*h.mu[static_cast<std::size_t>(j)].exact == expect);
        CHECK(*h.G[static_cast<std::size_t>(j)].exact == *h.S[static_cast<std::size_t>(j)].exact * GaussRational(j + 1));
    }
}

TEST_CASE("centered square has vanishing first moment") {
    auto h = harmonic_moments(square(), 4);
    CHECK(h.mu[1].exact->is_zero());
    CHECK(*h.mu[0].exact == GaussRational(4));
}

TEST_CASE("the two boundary routes to S agree") {
    for (const char* name : {"triangle", "square", "hexagon", "rectangle:3,1/2", "polygon:0,0;2,1;1,3;-1,1"}) {
        Polypol p = builder_by_name(name);
        auto h = harmonic_moments(p, 9);
        auto z = harmonic_moments_zbar(p, 9);
        auto m = harmonic_from_moments(moment_table(p, 9));
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(*h.mu[j].exact == *z[j].exact);
            CHECK(*h.mu[j].exact == *m[j].exact);
        }
    }
    for (const char* name : {"disk", "half-disk", "sector:0.3,2.5", "sector-tau:1/4,3"}) {
        Polypol p = builder_by_name(name);
        auto h = harmonic_moments(p, 9);
        auto z = harmonic_moments_zbar(p, 9);
        auto m = harmonic_from_moments(moment_table(p, 9));
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(std::abs(h.mu[j].value - z[j].value) < 1e-9);
            CHECK(std::abs(h.mu[j].value - m[j].value) < 1e-9);
        }
    }
}

TEST_CASE("G boundary evaluation") {
    CHECK(std::abs(G_boundary_eval(unit_disk(), 0.0) - std::numbers::pi) < 1e-12);
    CHECK(std::abs(G_boundary_eval(standard_triangle(), 0.0) - 0.5) < 1e-14);

    for (const char* name : {"triangle", "half-disk", "rectangle:1,2", "sector:0.3,2.5"}) {
        Polypol p = builder_by_name(name);
        auto h = harmonic_moments(p, 12);
        auto coeffs = cauchy_coefficients([&](C t) { return G_boundary_eval(p, t); }, 0.2, 64);
        for (int j = 0; j <= 12; ++j)
            CHECK(std::abs(coeffs[static_cast<std::size_t>(j)] - h.G[static_cast<std::size_t>(j)].value) <
                  1e-9 * std::max(1.0, std::pow(5.0, j)));
        // the 1/t form of the same integral
        for (C t : {C(0.3, 0.1), C(-0.2, 0.25), C(0.05, -0.4)})
            CHECK(std::abs(G_boundary_eval(p, t) - G_with_inverse_t(p, t)) < 1e-10);
    }
    CHECK_THROWS_AS(G_boundary_eval(standard_triangle(), 1.0), KernelOnBoundary);
    CHECK_THROWS_AS(G_boundary_eval(standard_triangle(), C(0, -1)), KernelOnBoundary);
}

TEST_CASE("restricted transform has the vertex denominator") {
    for (const char* name : {"triangle", "square", "hexagon", "polygon:0,0;2,1;1,3;-1,1"}) {
        Polypol p = builder_by_name(name);
        auto verts = p.polygon_vertices();
        const int n = static_cast<int>(verts.size());
        auto cleared = [&](C t) {
            C prod = 1.0;
            for (const auto& v : verts) prod *= 1.0 - t * C(v.x.to_double(), v.y.to_double());
            return restricted_transform_eval(p, t) * prod;
        };
        auto coeffs = cauchy_coefficients(cleared, 0.2, 64);
        double big = 0.0;
        for (const auto& c : coeffs) big = std::max(big, std::abs(c));
        for (int k = std::max(n - 2, 1); k < 48; ++k)
            CHECK(std::abs(coeffs[static_cast<std::size_t>(k)]) * std::pow(0.2, k) < 1e-10 * big);
    }
    // triangle: F(t, it) = 1/((1 − t)(1 − it))
    for (C t : {C(0.1, 0.2), C(-0.3, 0.05)})
        CHECK(std::abs(restricted_transform_eval(standard_triangle(), t) - 1.0 / ((1.0 - t) * (1.0 - C(0, 1) * t))) <
              1e-12);
}

TEST_CASE("restriction identity") {
    auto tri = restriction_identity_check(standard_triangle(), 10);
    CHECK(tri.exact);
    CHECK(tri.passed());
    CHECK(tri.entries.size() == 11);
    for (const auto& e : tri.entries) CHECK(e.delta_restricted == 0.0);

    auto rect = restriction_identity_check(rectangle(Rational(1), Rational(2)), 8);
    CHECK(rect.exact);
    CHECK(rect.passed());

    auto disk = restriction_identity_check(unit_disk(), 8);
    CHECK(!disk.exact);
    CHECK(disk.passed());
    for (const auto& e : disk.entries) {
        CHECK(e.delta_restricted < 1e-10);
        if (e.j >= 1) CHECK(std::abs(e.restricted.value) < 1e-10);
    }
    for (const char* name : {"half-disk", "sector:0.3,2.5"})
        CHECK(restriction_identity_check(builder_by_name(name), 10).passed());

    auto j = tri.to_json();
    CHECK(j["passed"] == true);
    CHECK(harmonic_moments(standard_triangle(), 1).to_json()["mu"][0][0] == "1/2");
}
