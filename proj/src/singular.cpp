#include "polypol/singular.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace polypol {

using C = std::complex<double>;

namespace {

// G(τ) = L·(1 − u x(τ) − v y(τ)) as a polynomial in τ with coefficients affine in (u, v).
TauPoly incidence(const RationalArc& arc) {
    const QPoly1& dx = arc.x().den();
    const QPoly1& dy = arc.y().den();
    QPoly1 l = exact_quotient(dx * dy, gcd(dx, dy));
    QPoly1 a = arc.x().num() * exact_quotient(l, dx);
    QPoly1 b = arc.y().num() * exact_quotient(l, dy);
    const int n = std::max({l.degree(), a.degree(), b.degree()});
    std::vector<QPoly2> c;
    for (int k = 0; k <= n; ++k) c.push_back(QPoly2::affine(l.coeff(k), -a.coeff(k), -b.coeff(k)));
    return TauPoly(std::move(c));
}

QPoly1 univariate(const QPoly2& p, bool in_x) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(in_x ? p.degree_x() : p.degree_y(), 0)) + 1);
    for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(in_x ? m.i : m.j)] = v;
    return QPoly1(std::move(c));
}

// Restriction of p to x = x0 (as a polynomial in y), or y = y0 when in_x is false.
QPoly1 restrict_to(const QPoly2& p, const Rational& c, bool fix_x) {
    Poly1<QPoly1> rec = fix_x ? to_recursive_in_y(p) : to_recursive_in_x(p);
    std::vector<Rational> out;
    for (const auto& q : rec.coefficients()) out.push_back(q(c));
    return QPoly1(std::move(out));
}

// Pieces of p after removing every rational linear factor.
std::vector<QPoly2> strip_linear(const QPoly2& p) {
    std::vector<QPoly2> pieces;
    auto [cx, r1] = split_content_in_x(p);
    auto [cy, rest] = split_content_in_y(r1);
    for (auto [cont, in_x] : {std::pair{cx, true}, std::pair{cy, false}}) {
        QPoly1 u = univariate(cont, in_x);
        for (const auto& root : rational_roots(u)) u = exact_quotient(u, QPoly1{-root.first, Rational(1)});
        if (u.degree() >= 2) pieces.push_back(in_x ? from_univariate_x(u) : from_univariate_y(u));
    }
    // a linear factor with a y-term meets x = 0 and x = 1 in rational points
    bool found = true;
    while (found && rest.total_degree() >= 2) {
        found = false;
        auto r0 = rational_roots(restrict_to(rest, Rational(0), true));
        auto r1s = rational_roots(restrict_to(rest, Rational(1), true));
        for (const auto& a : r0) {
            for (const auto& b : r1s) {
                QPoly2 lin = QPoly2::affine(-a.first, a.first - b.first, Rational(1));
                if (divides(lin, rest)) {
                    rest = normalize_sign_content(exact_quotient(rest, lin));
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    if (rest.total_degree() >= 2) pieces.push_back(rest);
    return pieces;
}

template <class T>
Poly1<C> to_complex_poly(const std::vector<T>& c) {
    std::vector<C> out(c.begin(), c.end());
    return Poly1<C>(std::move(out));
}

// Newton projection of w onto {f = 0} along the gradient.
bool project(const Poly2<double>& f, const Poly2<double>& fx, const Poly2<double>& fy, double& u, double& v,
             double tol) {
    for (int it = 0; it < 60; ++it) {
        double val = f.eval_as<double>(u, v);
        if (std::abs(val) <= tol) return true;
        double gu = fx.eval_as<double>(u, v), gv = fy.eval_as<double>(u, v);
        double g2 = gu * gu + gv * gv;
        if (g2 < 1e-300) return false;
        u -= val * gu / g2;
        v -= val * gv / g2;
    }
    return std::abs(f.eval_as<double>(u, v)) <= tol;
}

double coefficient_scale(const QPoly2& f) {
    double s = 0.0;
    for (const auto& [m, c] : f.terms()) s = std::max(s, std::abs(c.to_double()));
    return std::max(s, 1.0);
}

struct Fit {
    double slope = 0.0, intercept = 0.0, rms = 0.0;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
    }
    Fit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        double r = y[k] - f.intercept - f.slope * x[k];
        ss += r * r;
    }
    f.rms = std::sqrt(ss / n);
    return f;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<QPoly2> SingularSupport::components() const {
    std::vector<QPoly2> out;
    for (const auto& l : vertex_lines)
        if (!l.never_singular) out.push_back(l.line);
    out.insert(out.end(), dual_curves.begin(), dual_curves.end());
    return out;
}

nlohmann::json SingularSupport::to_json() const {
    nlohmann::json lines = nlohmann::json::array(), curves = nlohmann::json::array();
    for (const auto& l : vertex_lines)
        lines.push_back({{"vertex", {rational_to_json(l.vertex.x), rational_to_json(l.vertex.y)}},
                         {"line", poly2_to_json(l.line)},
                         {"text", to_string(l.line, "u", "v")},
                         {"never_singular", l.never_singular}});
    for (std::size_t k = 0; k < dual_curves.size(); ++k)
        curves.push_back({{"curve", poly2_to_json(dual_curves[k])},
                          {"text", to_string(dual_curves[k], "u", "v")},
                          {"arc", dual_curve_arc[k]}});
    return {{"vertex_lines", lines}, {"dual_curves", curves}};
}

bool tangency_test(const QPoly2& factor, const RationalArc& arc, int samples, double tol) {
    TauPoly g = incidence(arc);
    const bool solve_in_v = factor.degree_y() > 0;
    Poly1<QPoly1> rec = solve_in_v ? to_recursive_in_y(factor) : to_recursive_in_x(factor);
    for (int s = 0; s < samples; ++s) {
        const double fixed = 0.13 + 0.071 * s;
        std::vector<C> coeffs;
        for (const auto& q : rec.coefficients()) coeffs.push_back(q.eval_as<C>(C(fixed)));
        auto roots = complex_roots(Poly1<C>(coeffs));
        if (roots.empty()) return false;
        C other = roots[static_cast<std::size_t>(s) % roots.size()];
        C u = solve_in_v ? C(fixed) : other, v = solve_in_v ? other : C(fixed);
        std::vector<C> gc;
        for (const auto& q : g.coefficients()) gc.push_back(q.eval_as<C>(u, v));
        double norm = 0.0;
        for (const auto& c : gc) norm += std::abs(c);
        // double root at τ = ∞
        if (gc.size() >= 2 && std::abs(gc.back()) <= tol * norm && std::abs(gc[gc.size() - 2]) <= tol * norm)
            continue;
        Poly1<C> gp(gc);
        bool tangent = false;
        for (C t : complex_roots(gp.derivative())) {
            double scale = norm * std::pow(std::max(1.0, std::abs(t)), gp.degree());
            if (std::abs(gp.eval_as<C>(t)) <= tol * scale) tangent = true;
        }
        if (!tangent) return false;
    }
    return true;
}

std::vector<QPoly2> dual_curve(const RationalArc& arc) {
    TauPoly g = incidence(arc);
    QPoly2 r = resultant_in_tau(g, g.derivative());
    if (r.is_zero()) throw std::runtime_error("dual curve: resultant vanished identically; reparametrize the arc");
    if (divides(g.leading(), r)) r = exact_quotient(r, g.leading());
    std::vector<QPoly2> out;
    for (auto& piece : strip_linear(squarefree_part(r)))
        if (tangency_test(piece, arc)) out.push_back(normalize_sign_content(piece));
    return out;
}

SingularSupport singular_support(const Polypol& p) {
    SingularSupport s;
    for (const auto& v : p.genuine_vertices()) {
        VertexLine l{v.point, QPoly2::affine(Rational(1), -v.point.x, -v.point.y), false};
        l.never_singular = l.line.is_constant();
        s.vertex_lines.push_back(std::move(l));
    }
    std::vector<QPoly2> seen;
    for (std::size_t k = 0; k < p.arcs().size(); ++k) {
        const auto& arc = p.arcs()[k];
        QPoly2 comp = implicitize(arc);
        if (comp.total_degree() < 2) continue;
        bool dup = false;
        for (const auto& c : seen) dup = dup || proportional(c, comp);
        if (dup) continue;
        seen.push_back(comp);
        for (auto& d : dual_curve(arc)) {
            bool known = false;
            for (const auto& e : s.dual_curves) known = known || proportional(e, d);
            if (known) continue;
            s.dual_curves.push_back(std::move(d));
            s.dual_curve_arc.push_back(static_cast<int>(k));
        }
    }
    return s;
}

SupportDistance support_distance(const SingularSupport& s, double u, double v) {
    SupportDistance best;
    best.distance = std::numeric_limits<double>::infinity();
    auto comps = s.components();
    for (std::size_t k = 0; k < comps.size(); ++k) {
        Poly2<double> f = comps[k].cast<double>();
        Poly2<double> fx = f.dx(), fy = f.dy();
        double pu = u, pv = v;
        double d;
        if (project(f, fx, fy, pu, pv, 1e-13 * coefficient_scale(comps[k]))) {
            d = std::hypot(pu - u, pv - v);
        } else {
            double gu = fx.eval_as<double>(u, v), gv = fy.eval_as<double>(u, v);
            d = std::abs(f.eval_as<double>(u, v)) / std::max(std::hypot(gu, gv), 1e-300);
        }
        if (d < best.distance) {
            best.distance = d;
            best.component = static_cast<int>(k);
        }
    }
    return best;
}

const char* to_string(ExponentClass c) {
    switch (c) {
        case ExponentClass::pole_integer: return "pole_integer";
        case ExponentClass::half_integral: return "half_integral";
        case ExponentClass::logarithmic: return "logarithmic";
        case ExponentClass::regular: return "regular";
        case ExponentClass::unclassified: return "unclassified";
    }
    return "unclassified";
}

nlohmann::json ExponentEstimate::to_json() const {
    nlohmann::json s = nlohmann::json::array();
    for (auto [e, f] : samples) s.push_back({e, f});
    return {{"component", component},
            {"base", {base.u, base.v}},
            {"direction", {direction.u, direction.v}},
            {"exponent", exponent},
            {"residual", residual},
            {"log_slope", log_slope},
            {"log_residual", log_residual},
            {"classification", to_string(classification)},
            {"samples", s}};
}

ExponentEstimate probe_exponent(const Polypol& p, const QPoly2& component, DualPoint base, DualPoint direction,
                                const ProbeOptions& opts) {
    Poly2<double> f = component.cast<double>();
    if (!project(f, f.dx(), f.dy(), base.u, base.v, 1e-10 * coefficient_scale(component)))
        throw ProbeError("base point could not be projected onto the component");
    double len = std::hypot(direction.u, direction.v);
    if (!(len > 0.0)) throw std::invalid_argument("probe direction must be nonzero");
    direction = {direction.u / len, direction.v / len};

    ExponentEstimate est;
    est.component = to_string(component, "u", "v");
    est.base = base;
    est.direction = direction;
    std::vector<double> refused;
    for (int k = 0; k < opts.steps; ++k) {
        double eps = opts.eps0 * std::ldexp(1.0, -k);
        DualPoint w{base.u + eps * direction.u, base.v + eps * direction.v};
        try {
            est.samples.emplace_back(eps, transform_eval(p, w, opts.transform).value);
        } catch (const KernelOnBoundary&) {
            refused.push_back(eps);
        } catch (const QuadratureError&) {
            refused.push_back(eps);
        }
    }
    if (!refused.empty()) {
        std::ostringstream os;
        os << "evaluation refused along the ray at eps =";
        for (double e : refused) os << " " << fmt(e);
        os << "; usable eps =";
        for (auto [e, v] : est.samples) os << " " << fmt(e);
        throw ProbeError(os.str());
    }
    std::vector<double> le, lle, lf;
    for (auto [e, v] : est.samples) {
        le.push_back(std::log(e));
        lle.push_back(std::log(std::log(1.0 / e)));
        lf.push_back(std::log(std::abs(v)));
    }
    Fit power = least_squares(le, lf);
    Fit logfit = least_squares(lle, lf);
    est.exponent = power.slope;
    est.residual = power.rms;
    est.log_slope = logfit.slope;
    est.log_residual = logfit.rms;

    const double e = est.exponent;
    const double nearest_int = std::round(e);
    const double nearest_half = std::floor(e) + 0.5;
    if (std::abs(e) < 0.3 && std::abs(std::abs(logfit.slope) - 1.0) < 0.1 && logfit.rms < power.rms)
        est.classification = ExponentClass::logarithmic;
    else if (std::abs(e) < 0.1)
        est.classification = ExponentClass::regular;
    else if (nearest_int < 0 && std::abs(e - nearest_int) < 0.1)
        est.classification = ExponentClass::pole_integer;
    else if (std::abs(e - nearest_half) < 0.1)
        est.classification = ExponentClass::half_integral;
    else
        est.classification = ExponentClass::unclassified;
    return est;
}

std::string ScanReport::to_csv() const {
    std::ostringstream os;
    os << "u,v,abs_F,flagged,nearest_component,distance,status\n";
    for (const auto& p : points)
        os << fmt(p.u) << "," << fmt(p.v) << "," << fmt(p.absF) << "," << (p.flagged ? 1 : 0) << ","
           << p.nearest.component << "," << fmt(p.nearest.distance) << "," << p.status << "\n";
    return os.str();
}

nlohmann::json ScanReport::summary() const {
    return {{"resolution", resolution},
            {"window", {lo, hi}},
            {"points", points.size()},
            {"flagged", flagged},
            {"refused", refused},
            {"flagged_outside_tolerance", flagged_outside},
            {"containment", containment()},
            {"frontier", frontier},
            {"frontier_near_support", frontier_near_support},
            {"note", "numerical evidence for the containment direction only, not a proof"}};
}

ScanReport conjecture_scan(const Polypol& p, int resolution, double lo, double hi, const ScanOptions& opts) {
    if (resolution < 2) throw std::invalid_argument("scan resolution must be at least 2");
    SingularSupport support = singular_support(p);
    ScanReport rep;
    rep.resolution = resolution;
    rep.lo = lo;
    rep.hi = hi;
    const double step = (hi - lo) / (resolution - 1);
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            ScanPoint pt;
            pt.u = lo + step * i;
            pt.v = lo + step * j;
            try {
                TransformValue tv = transform_eval(p, {pt.u, pt.v}, opts.transform);
                pt.absF = std::abs(tv.value);
                if (!std::isfinite(tv.value) || pt.absF > opts.blowup) pt.status = "blowup";
                else if (tv.error_estimate > opts.disagreement * std::max(1.0, pt.absF)) pt.status = "disagreement";
                else pt.status = "ok";
            } catch (const KernelOnBoundary&) {
                pt.status = "refused";
            } catch (const QuadratureError&) {
                pt.status = "quadrature";
            }
            pt.flagged = pt.status != "ok" && pt.status != "refused";
            pt.nearest = support_distance(support, pt.u, pt.v);
            rep.points.push_back(std::move(pt));
        }
    }
    auto at = [&](int i, int j) -> const ScanPoint& { return rep.points[static_cast<std::size_t>(i * resolution + j)]; };
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            const auto& pt = at(i, j);
            if (pt.flagged) {
                ++rep.flagged;
                if (pt.nearest.distance > opts.proximity) ++rep.flagged_outside;
            }
            if (pt.status != "refused") continue;
            ++rep.refused;
            bool next_to_evaluated = false;
            for (auto [di, dj] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
                int a = i + di, b = j + dj;
                if (a >= 0 && b >= 0 && a < resolution && b < resolution && at(a, b).status != "refused")
                    next_to_evaluated = true;
            }
            if (next_to_evaluated) {
                ++rep.frontier;
                if (pt.nearest.distance <= step * (1.0 + 1e-9)) ++rep.frontier_near_support;
            }
        }
    }
    return rep;
}

}  // namespace polypol
