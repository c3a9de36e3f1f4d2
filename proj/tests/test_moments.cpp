#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "polypol/moments.hpp"

using namespace polypol;

namespace {

Rational fact(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

Rational binom(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

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

}  // namespace

TEST_CASE("triangle moments are i!j!/(i+j+2)!") {
    Polypol t = standard_triangle();
    CHECK(moment(t, 0, 0).exact == Rational(1, 2));
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j + i <= 5; ++j) CHECK(moment(t, i, j).exact == fact(i) * fact(j) / fact(i + j + 2));
    auto tab = moment_table(t, 2);
    CHECK(tab.exact());
    for (const auto& [k, v] : tab.values)
        CHECK(*v.exact == fact(k.first) * fact(k.second) / fact(k.first + k.second + 2));
}

TEST_CASE("unit square and disk moment tables") {
    auto sq = moment_table(rectangle(Rational(1), Rational(1)), 1);
    CHECK(sq.at(0, 0).exact == Rational(1));
    CHECK(sq.at(1, 0).exact == Rational(1, 2));
    CHECK(sq.at(0, 1).exact == Rational(1, 2));

    const double pi = std::numbers::pi;
    auto d = moment_table(unit_disk(), 2);
    CHECK(std::abs(d.at(0, 0).value - pi) < 1e-12);
    CHECK(std::abs(d.at(2, 0).value - pi / 4) < 1e-12);
    CHECK(std::abs(d.at(0, 2).value - pi / 4) < 1e-12);
    CHECK(std::abs(d.at(1, 0).value) < 1e-12);
    CHECK(std::abs(d.at(0, 1).value) < 1e-12);
    CHECK(std::abs(d.at(1, 1).value) < 1e-12);
    CHECK(std::abs(moment(unit_disk(), 1, 0).value) < 1e-12);
    CHECK_THROWS(moment(unit_disk(), -1, 0));
}

TEST_CASE("normalized mgf series") {
    auto s = normalized_mgf_series(standard_triangle(), 4);
    for (const auto& [k, c] : s.coefficients) CHECK(c.exact == Rational(1));
    CHECK(s.coefficients.size() == 15);
    const double pi = std::numbers::pi;
    CHECK(std::abs(normalized_mgf_series(unit_disk(), 0).at(0, 0).value - 2 * pi) < 1e-12);
    CHECK(std::abs(normalized_mgf_series(upper_half_disk(), 0).at(0, 0).value - pi) < 1e-12);
}

TEST_CASE("dy and dx reductions agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Polypol p = polygon(random_polygon(rng, 3 + trial % 6));
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) CHECK(moment(p, i, j).exact == moment_dx(p, i, j).exact);
    }
    for (const char* name : {"disk", "half-disk", "sector:0.4,2.9", "sector-tau:1/3,inf"}) {
        Polypol p = builder_by_name(name);
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) CHECK(std::abs(moment(p, i, j).value - moment_dx(p, i, j).value) < 1e-10);
    }
}

TEST_CASE("translation covariance on polygons") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        auto v = random_polygon(rng, 3 + trial % 5);
        Rational tx(static_cast<long>(rng() % 7) - 3, 2), ty(static_cast<long>(rng() % 5) - 2, 3);
        std::vector<Point2> w;
        for (auto& q : v) w.push_back({q.x + tx, q.y + ty});
        auto base = moment_table(polygon(v), 4);
        auto moved = moment_table(polygon(w), 4);
        for (const auto& [k, val] : moved.values) {
            auto [i, j] = k;
            Rational expect(0);
            for (int a = 0; a <= i; ++a)
                for (int b = 0; b <= j; ++b)
                    expect += binom(i, a) * binom(j, b) * pow(tx, static_cast<unsigned>(i - a)) *
                              pow(ty, static_cast<unsigned>(j - b)) * *base.at(a, b).exact;
            CHECK(*val.exact == expect);
        }
    }
}

TEST_CASE("moment table serialization") {
    auto tab = moment_table(standard_triangle(), 1);
    auto j = tab.to_json();
    CHECK(j["(0,0)"] == "1/2");
    CHECK(j["(1,0)"] == "1/6");
    CHECK(tab.to_csv().rfind("i,j,value\n", 0) == 0);
    CHECK(tab.fingerprint.size() == 16);
}
