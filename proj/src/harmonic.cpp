#include "polypol/harmonic.hpp"

#include <cmath>

namespace polypol {

using C = std::complex<double>;
using GPoly = Poly1<GaussRational>;

namespace {

const GaussRational I(Rational(0), Rational(1));

GPoly gauss(const QPoly1& p) {
    std::vector<GaussRational> c;
    for (const auto& r : p.coefficients()) c.emplace_back(r);
    return GPoly(std::move(c));
}

GaussRational integrate_g(const GPoly& p, const Rational& a, const Rational& b) {
    GPoly prim = antiderivative(p);
    return prim(GaussRational(b)) - prim(GaussRational(a));
}

nlohmann::json gauss_json(const GaussRational& g) { return {rational_to_json(g.re), rational_to_json(g.im)}; }

double gap(const CNumber& a, const CNumber& b) {
    if (a.exact && b.exact) return (*a.exact == *b.exact) ? 0.0 : std::abs(a.value - b.value);
    return std::abs(a.value - b.value);
}

CNumber scale(const CNumber& a, const Rational& s) {
    if (a.exact) return CNumber(*a.exact * GaussRational(s));
    return CNumber(a.value * s.to_double());
}

// Boundary integrals ∮ w_j dτ for j = 0..order, exact on polynomial arcs.
// `exact_form(x, y, j)` and `float_form(x, y, xp, yp, j)` give the integrands.
template <class ExactForm, class FloatForm>
std::vector<CNumber> boundary_series(const Polypol& p, int order, ExactForm exact_form, FloatForm float_form,
                                     const QuadratureOptions& opts) {
    const auto n = static_cast<std::size_t>(order) + 1;
    std::vector<GaussRational> ex(n);
    std::vector<C> num(n, 0.0);
    bool all_exact = true;
    for (const auto& arc : p.arcs()) {
        if (arc.is_polynomial()) {
            GPoly x = gauss(arc.x().num()), y = gauss(arc.y().num());
            for (std::size_t j = 0; j < n; ++j) ex[j] += integrate_g(exact_form(x, y, static_cast<int>(j)), arc.a(), arc.b());
            continue;
        }
        all_exact = false;
        auto f = [&](double t, double* out) {
            double x, y, xp, yp;
            arc.eval(t, x, y, xp, yp);
            for (std::size_t j = 0; j < n; ++j) {
                C w = float_form(x, y, xp, yp, static_cast<int>(j));
                out[2 * j] = w.real();
                out[2 * j + 1] = w.imag();
            }
        };
        auto r = integrate_adaptive(f, static_cast<int>(2 * n), arc.a().to_double(), arc.b().to_double(), opts);
        for (std::size_t j = 0; j < n; ++j) num[j] += C(r.values[2 * j], r.values[2 * j + 1]);
    }
    std::vector<CNumber> out;
    for (std::size_t j = 0; j < n; ++j)
        out.push_back(all_exact ? CNumber(ex[j]) : CNumber(ex[j].to_complex() + num[j]));
    return out;
}

void check_order(int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
}

}  // namespace

nlohmann::json CNumber::to_json() const {
    if (exact) return gauss_json(*exact);
    return {value.real(), value.imag()};
}

bool HarmonicSeries::exact() const {
    for (const auto& m : mu)
        if (!m.exact) return false;
    return true;
}

nlohmann::json HarmonicSeries::to_json() const {
    auto arr = [](const std::vector<CNumber>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : v) a.push_back(c.to_json());
        return a;
    };
    return {{"order", order}, {"measure", "dx dy"}, {"mu", arr(mu)}, {"S", arr(S)}, {"G", arr(G)}};
}

HarmonicSeries harmonic_moments(const Polypol& p, int order, const QuadratureOptions& opts) {
    check_order(order);
    HarmonicSeries h;
    h.order = order;
    h.mu = boundary_series(
        p, order,
        [](const GPoly& x, const GPoly& y, int j) {
            GPoly z = x + I * y;
            return pow(z, static_cast<unsigned>(j + 1)) * y.derivative() * GaussRational(Rational(1, j + 1));
        },
        [](double x, double y, double, double yp, int j) { return std::pow(C(x, y), j + 1) * yp / double(j + 1); },
        opts);
    for (int j = 0; j <= order; ++j) {
        h.S.push_back(h.mu[static_cast<std::size_t>(j)]);
        h.G.push_back(scale(h.mu[static_cast<std::size_t>(j)], Rational(j + 1)));
    }
    return h;
}

std::vector<CNumber> harmonic_moments_zbar(const Polypol& p, int order, const QuadratureOptions& opts) {
    check_order(order);
    const GaussRational factor(Rational(0), Rational(-1, 2));
    return boundary_series(
        p, order,
        [&](const GPoly& x, const GPoly& y, int j) {
            GPoly z = x + I * y, zbar = x - I * y;
            return zbar * pow(z, static_cast<unsigned>(j)) * z.derivative() * factor;
        },
        [](double x, double y, double xp, double yp, int j) {
            C z(x, y);
            return C(0, -0.5) * std::conj(z) * std::pow(z, j) * C(xp, yp);
        },
        opts);
}

std::vector<CNumber> harmonic_from_moments(const MomentTable& table) {
    std::vector<CNumber> out;
    for (int j = 0; j <= table.max_degree; ++j) {
        GaussRational ex;
        C val = 0.0;
        bool exact = true;
        GaussRational ik(1);
        Rational binom(1);
        for (int k = 0; k <= j; ++k) {
            const Number& m = table.at(j - k, k);
            if (m.exact) ex += ik * GaussRational(binom * *m.exact);
            else exact = false;
            val += ik.to_complex() * binom.to_double() * m.value;
            ik = ik * I;
            binom = binom * Rational(j - k) / Rational(k + 1);
        }
        out.push_back(exact ? CNumber(ex) : CNumber(val));
    }
    return out;
}

std::complex<double> G_boundary_eval(const Polypol& p, std::complex<double> t, const TransformOptions& opts) {
    check_kernel(p, t, C(0, 1) * t, opts.root_margin);
    C total = 0.0;
    for (const auto& arc : p.arcs()) {
        total += integrate_complex(
            [&](double s) {
                double x, y, xp, yp;
                arc.eval(s, x, y, xp, yp);
                C z(x, y);
                return z * C(xp, -yp) / (1.0 - t * z);
            },
            arc.a().to_double(), arc.b().to_double(), opts.quad);
    }
    return C(0, 0.5) * total;
}

std::complex<double> restricted_transform_eval(const Polypol& p, std::complex<double> t, const TransformOptions& opts) {
    return transform_eval_complex(p, t, C(0, 1) * t, opts);
}

bool RestrictionReport::passed() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

nlohmann::json RestrictionReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries)
        rows.push_back({{"j", e.j},
                        {"restricted", e.restricted.to_json()},
                        {"expected", e.expected.to_json()},
                        {"delta_restricted", e.delta_restricted},
                        {"integrated", e.integrated.to_json()},
                        {"weighted", e.weighted.to_json()},
                        {"delta_integrated", e.delta_integrated},
                        {"pass", e.pass}});
    return {{"order", order}, {"exact", exact}, {"tolerance", tolerance}, {"passed", passed()}, {"entries", rows}};
}

RestrictionReport restriction_identity_check(const Polypol& p, int order, double tol, const QuadratureOptions& opts) {
    check_order(order);
    // F(t, it) coefficients: contract the normalized moment series along v = it
    SeriesExpansion series = transform_series(p, order, opts);
    std::vector<CNumber> restricted;
    for (int j = 0; j <= order; ++j) {
        GaussRational ex;
        C val = 0.0;
        bool exact = true;
        GaussRational il(1);
        for (int l = 0; l <= j; ++l) {
            const Number& a = series.at(j - l, l);
            if (a.exact) ex += il * GaussRational(*a.exact);
            else exact = false;
            val += il.to_complex() * a.value;
            il = il * I;
        }
        restricted.push_back(exact ? CNumber(ex) : CNumber(val));
    }
    HarmonicSeries h = harmonic_moments(p, order, opts);

    RestrictionReport rep;
    rep.order = order;
    rep.exact = h.exact();
    rep.tolerance = rep.exact ? 0.0 : tol;
    for (int j = 0; j <= order; ++j) {
        const auto k = static_cast<std::size_t>(j);
        RestrictionEntry e;
        e.j = j;
        e.restricted = restricted[k];
        e.expected = scale(h.mu[k], Rational((j + 1) * (j + 2)));
        e.integrated = scale(restricted[k], Rational(1, j + 2));  // t^{-2} ∫_0^t s^{j+1} ds = t^j/(j+2)
        e.weighted = h.G[k];
        e.delta_restricted = gap(e.restricted, e.expected);
        e.delta_integrated = gap(e.integrated, e.weighted);
        bool both_exact = e.restricted.exact && e.expected.exact;
        if (rep.exact && both_exact) {
            e.pass = *e.restricted.exact == *e.expected.exact && *e.integrated.exact == *e.weighted.exact;
        } else {
            double s1 = std::max(1.0, std::abs(e.expected.value)), s2 = std::max(1.0, std::abs(e.weighted.value));
            e.pass = e.delta_restricted <= tol * s1 && e.delta_integrated <= tol * s2;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace polypol
