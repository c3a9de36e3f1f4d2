#include <random>

#include "doctest.h"
#include "polypol/algebra.hpp"

using namespace polypol;

namespace {

QPoly1 random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
    return QPoly1(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse("3e-2") == Rational(3, 100));
    CHECK(Rational::parse("7/21") == Rational(1, 3));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
    CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
    CHECK(rationalize(0.333333333333, 1e-9) == Rational(1, 3));
}

TEST_CASE("poly arithmetic examples") {
    QPoly1 a{Rational(1), Rational(1)}, b{Rational(-1), Rational(1)};
    CHECK(a * b == QPoly1{Rational(-1), Rational(0), Rational(1)});
    CHECK(QPoly1::constant(5).derivative().is_zero());
    QPoly2 x = QPoly2::x(), y = QPoly2::y();
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("gcd_reduce examples") {
    QPoly1 t = QPoly1::identity();
    RatFunc1 r1(t * t - QPoly1::constant(1), t - QPoly1::constant(1));
    CHECK(r1.num() == t + QPoly1::constant(1));
    CHECK(r1.den() == QPoly1::constant(1));
    RatFunc1 r2(QPoly1{}, t);
    CHECK(r2.num().is_zero());
    CHECK(r2.den() == QPoly1::constant(1));
    RatFunc1 r3(t * Rational(2), QPoly1::constant(4));
    CHECK(r3.num() == t * Rational(1, 2));
    CHECK(r3.den() == QPoly1::constant(1));
    CHECK_THROWS_AS(RatFunc1(t, QPoly1{}), std::domain_error);
}

TEST_CASE("resultant examples") {
    QPoly2 u = QPoly2::x(), v = QPoly2::y();
    TauPoly p{u, QPoly2{}, QPoly2(Rational(1))};
    TauPoly q{v, QPoly2(Rational(1))};
    CHECK(resultant_in_tau(p, q) == v * v + u);
    TauPoly r{-u, QPoly2(Rational(1))};
    CHECK(resultant_in_tau(r, r).is_zero());
    CHECK_THROWS_AS(resultant_in_tau(TauPoly{u}, TauPoly{v}), std::invalid_argument);
}

TEST_CASE("real roots examples") {
    QPoly1 t = QPoly1::identity(), one = QPoly1::constant(1);
    auto r1 = real_roots(t * t - one, Rational(0), Rational(2));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].multiplicity == 1);
    CHECK(r1[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(real_roots(t * t + one, Rational(-10), Rational(10)).empty());
    QPoly1 s = t - QPoly1::constant(Rational(1, 3));
    auto r3 = real_roots(s * s, Rational(0), Rational(1));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].multiplicity == 2);
    CHECK(std::abs(r3[0].value - 1.0 / 3.0) < 1e-12);
    CHECK(count_real_roots(t * t - one, Rational(-1), Rational(1)) == 2);
    CHECK(count_real_roots(t * t - one, Rational(1), Rational(3)) == 1);
    auto rr = rational_roots(s * s * (t * t - QPoly1::constant(2)));
    REQUIRE(rr.size() == 1);
    CHECK(rr[0].first == Rational(1, 3));
    CHECK(rr[0].second == 2);
}

TEST_CASE("complex roots") {
    QPoly1 p{Rational(1), Rational(0), Rational(1)};
    auto r = complex_roots(p);
    REQUIRE(r.size() == 2);
    for (auto z : r) CHECK(std::abs(z * z + 1.0) < 1e-14);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly1 f = random_poly(rng, deg(rng)), g = random_poly(rng, deg(rng)), h = random_poly(rng, deg(rng));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
}

TEST_CASE("gcd_reduce is invariant under common factors") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly1 a = random_poly(rng, deg(rng)), b = random_poly(rng, deg(rng)), c = random_poly(rng, deg(rng));
        if (b.is_zero() || c.is_zero()) continue;
        CHECK(RatFunc1(a * c, b * c) == RatFunc1(a, b));
    }
}

TEST_CASE("resultant vanishes exactly on common roots") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> deg(1, 3), small(-3, 3);
    QPoly2 u = QPoly2::x(), v = QPoly2::y();
    for (int trial = 0; trial < 25; ++trial) {
        // p(τ) = Σ (a_k + b_k u + c_k v) τ^k, similarly q
        auto make = [&](int d) {
            std::vector<QPoly2> c;
            for (int k = 0; k <= d; ++k)
                c.push_back(QPoly2::affine(Rational(small(rng)), Rational(small(rng)), Rational(small(rng))));
            c.back() += QPoly2(Rational(5));
            return TauPoly(std::move(c));
        };
        TauPoly p = make(deg(rng)), q = make(deg(rng));
        QPoly2 res = resultant_in_tau(p, q);
        for (int s = 0; s < 6; ++s) {
            Rational u0(small(rng), 2), v0(small(rng), 3);
            auto spec = [&](const TauPoly& w) {
                std::vector<Rational> c;
                for (const auto& k : w.coefficients()) c.push_back(k(u0, v0));
                return QPoly1(std::move(c));
            };
            QPoly1 ps = spec(p), qs = spec(q);
            // brute-force oracle: numeric common root between the complex root sets
            bool common = false;
            if (ps.degree() == p.degree() && qs.degree() == q.degree()) {
                for (auto a : complex_roots(ps))
                    for (auto b : complex_roots(qs))
                        if (std::abs(a - b) < 1e-6) common = true;
                CHECK(res(u0, v0).is_zero() == common);
            }
        }
    }
}

TEST_CASE("bivariate gcd and squarefree part") {
    QPoly2 x = QPoly2::x(), y = QPoly2::y(), one(Rational(1));
    QPoly2 circle = one - x * x - y * y;
    QPoly2 g = gcd(circle * y * Rational(3), circle * (x + one));
    CHECK(proportional(g, circle));
    CHECK(proportional(squarefree_part(circle * circle * y), circle * y));
    auto [cx, rest] = split_content_in_x((x + one) * circle);
    CHECK(proportional(cx, x + one));
    CHECK(proportional(rest, circle));
}

TEST_CASE("poly2 json round trip") {
    QPoly2 p = QPoly2::affine(Rational(1), Rational(-1, 2), Rational(3)) * QPoly2::x();
    CHECK(poly2_from_json(poly2_to_json(p)) == p);
    QPoly1 q{Rational(1, 3), Rational(0), Rational(-2)};
    CHECK(poly1_from_json(poly1_to_json(q)) == q);
}
