#include "polypol/fantappie.hpp"

#include <cmath>
#include <numbers>

namespace polypol {

const char* to_string(TransformMethod m) {
    switch (m) {
        case TransformMethod::boundary_dy: return "boundary_dy";
        case TransformMethod::boundary_dx: return "boundary_dx";
        case TransformMethod::boundary_radial: return "boundary_radial";
        case TransformMethod::closed_form: return "closed_form";
        case TransformMethod::series: return "series";
    }
    return "unknown";
}

nlohmann::json TransformValue::to_json() const {
    return {{"value", value}, {"method", polypol::to_string(method)}, {"error_estimate", error_estimate}};
}

// ---- kernel check -------------------------------------------------------------

namespace {

struct ClearedArc {
    QPoly1 L, X, Y;  // 1 − ux − vy = (L − uX − vY)/L on the arc
};

ClearedArc clear_arc(const RationalArc& arc) {
    const QPoly1& dx = arc.x().den();
    const QPoly1& dy = arc.y().den();
    QPoly1 g = gcd(dx, dy);
    QPoly1 L = exact_quotient(dx * dy, g);
    return {L, arc.x().num() * exact_quotient(L, dx), arc.y().num() * exact_quotient(L, dy)};
}

}  // namespace

void check_kernel(const Polypol& p, std::complex<double> u, std::complex<double> v, double margin) {
    const Rational ur = Rational::from_double(u.real()), ui = Rational::from_double(u.imag());
    const Rational vr = Rational::from_double(v.real()), vi = Rational::from_double(v.imag());
    const Rational m = Rational::from_double(margin);
    int k = 0;
    for (const auto& arc : p.arcs()) {
        ClearedArc c = clear_arc(arc);
        QPoly1 gr = c.L - c.X * ur - c.Y * vr;
        QPoly1 gi = -(c.X * ui) - c.Y * vi;
        QPoly1 g = gi.is_zero() ? gr : (gr.is_zero() ? gi : gcd(gr, gi));
        Rational lo = arc.a() - m, hi = arc.b() + m;
        if (g.is_zero())
            throw KernelOnBoundary("kernel line contains boundary arc " + std::to_string(k), k, arc.a().to_double());
        if (g.degree() > 0 && count_real_roots(g, lo, hi) > 0) {
            auto roots = real_roots(g, lo, hi);
            double tau = roots.empty() ? arc.a().to_double() : roots.front().value;
            throw KernelOnBoundary("kernel line 1 - u x - v y meets arc " + std::to_string(k) + " at tau = " +
                                       format_double(tau),
                                   k, tau);
        }
        ++k;
    }
}

// ---- boundary evaluation ------------------------------------------------------

namespace {

struct BoundarySums {
    double dy = 0.0, dx = 0.0, radial = 0.0;
    double qerr = 0.0;
};

BoundarySums boundary_sums(const Polypol& p, DualPoint w, const QuadratureOptions& qopts) {
    BoundarySums s;
    for (const auto& arc : p.arcs()) {
        auto f = [&](double t, double* out) {
            double x, y, xp, yp;
            arc.eval(t, x, y, xp, yp);
            double q = 1.0 - w.u * x - w.v * y;
            double iq2 = 1.0 / (q * q);
            out[0] = yp * iq2;
            out[1] = xp * iq2;
            out[2] = (x * yp - y * xp) * iq2;
        };
        auto r = integrate_adaptive(f, 3, arc.a().to_double(), arc.b().to_double(), qopts);
        s.dy += r.values[0];
        s.dx += r.values[1];
        s.radial += r.values[2];
        s.qerr += r.error_estimate;
    }
    return s;
}

}  // namespace

double transform_boundary(const Polypol& p, DualPoint w, TransformMethod method, const TransformOptions& opts) {
    BoundarySums s = boundary_sums(p, w, opts.quad);
    switch (method) {
        case TransformMethod::boundary_dy:
            if (w.u == 0.0) throw std::domain_error("dy representation needs u != 0");
            return s.dy / w.u;
        case TransformMethod::boundary_dx:
            if (w.v == 0.0) throw std::domain_error("dx representation needs v != 0");
            return -s.dx / w.v;
        case TransformMethod::boundary_radial: return s.radial;
        default: throw std::invalid_argument("transform_boundary: not a boundary method");
    }
}

TransformValue transform_eval(const Polypol& p, DualPoint w, const TransformOptions& opts) {
    if (!std::isfinite(w.u) || !std::isfinite(w.v)) throw std::invalid_argument("dual point must be finite");
    check_kernel(p, {w.u, 0.0}, {w.v, 0.0}, opts.root_margin);
    BoundarySums s = boundary_sums(p, w, opts.quad);
    const double au = std::abs(w.u), av = std::abs(w.v);
    const bool use_u = au > opts.crossover, use_v = av > opts.crossover;
    TransformValue out;
    if (use_u && use_v) {
        double fdy = s.dy / w.u, fdx = -s.dx / w.v;
        bool dy_first = au >= av;
        out.value = dy_first ? fdy : fdx;
        out.method = dy_first ? TransformMethod::boundary_dy : TransformMethod::boundary_dx;
        out.error_estimate = std::abs(fdy - fdx) + s.qerr / std::max(au, av);
    } else if (use_u) {
        out.value = s.dy / w.u;
        out.method = TransformMethod::boundary_dy;
        out.error_estimate = s.qerr / au;
    } else if (use_v) {
        out.value = -s.dx / w.v;
        out.method = TransformMethod::boundary_dx;
        out.error_estimate = s.qerr / av;
    } else {
        out.value = s.radial;
        out.method = TransformMethod::boundary_radial;
        out.error_estimate = s.qerr;
    }
    return out;
}

std::complex<double> transform_eval_complex(const Polypol& p, std::complex<double> u, std::complex<double> v,
                                            const TransformOptions& opts) {
    check_kernel(p, u, v, opts.root_margin);
    std::complex<double> total = 0.0;
    for (const auto& arc : p.arcs()) {
        total += integrate_complex(
            [&](double t) {
                double x, y, xp, yp;
                arc.eval(t, x, y, xp, yp);
                std::complex<double> q = 1.0 - u * x - v * y;
                return (x * yp - y * xp) / (q * q);
            },
            arc.a().to_double(), arc.b().to_double(), opts.quad);
    }
    return total;
}

SeriesExpansion transform_series(const Polypol& p, int order, const QuadratureOptions& opts) {
    return normalized_mgf_series(p, order, opts);
}

// ---- closed forms -------------------------------------------------------------

namespace {

double rho_squared(DualPoint w, const char* who) {
    double r2 = 1.0 - w.u * w.u - w.v * w.v;
    if (!(r2 > 0.0)) throw std::domain_error(std::string(who) + " requires 1 - u^2 - v^2 > 0");
    return r2;
}

}  // namespace

double closed_form_disk(DualPoint w) {
    double r2 = rho_squared(w, "closed_form_disk");
    return 2.0 * std::numbers::pi / (r2 * std::sqrt(r2));
}

double closed_form_half_disk(DualPoint w) {
    double r2 = rho_squared(w, "closed_form_half_disk");
    double rho = std::sqrt(r2);
    return (std::numbers::pi + 2.0 * std::atan(w.v / rho)) / (r2 * rho) + 2.0 * w.v / ((1.0 - w.u * w.u) * r2);
}

double closed_form_sector(double tau0, std::optional<double> tau1, DualPoint w) {
    double r2 = rho_squared(w, "closed_form_sector");
    double rho = std::sqrt(r2);
    const double u = w.u, v = w.v;
    auto A = [&](double s) {
        return 2.0 * std::atan(s / rho) / (r2 * rho) +
               (2.0 * s * (u + u * u + v * v) / r2 - 2.0 * v) / ((1.0 + u) * (s * s + r2));
    };
    double upper = tau1 ? A((1.0 + u) * *tau1 - v) : std::numbers::pi / (r2 * rho);
    return upper - A((1.0 + u) * tau0 - v);
}

double closed_form_sector_angles(double phi0, double phi1, DualPoint w) {
    if (!(phi0 >= 0.0 && phi0 < phi1 && phi1 <= std::numbers::pi + 1e-15))
        throw std::domain_error("closed_form_sector requires 0 <= phi0 < phi1 <= pi");
    std::optional<double> t1;
    if (std::abs(phi1 - std::numbers::pi) > 1e-15) t1 = std::tan(phi1 / 2);
    return closed_form_sector(std::tan(phi0 / 2), t1, w);
}

double closed_form_triangle(DualPoint w) {
    if (w.u == 1.0 || w.v == 1.0) throw std::domain_error("closed_form_triangle has poles on u = 1 and v = 1");
    return 1.0 / ((1.0 - w.u) * (1.0 - w.v));
}

double closed_form_rectangle(double a, double b, DualPoint w) {
    if (!(a > 0 && b > 0)) throw std::domain_error("closed_form_rectangle requires a, b > 0");
    double p = 1.0 - a * w.u, q = 1.0 - b * w.v, r = 1.0 - a * w.u - b * w.v;
    if (p == 0.0 || q == 0.0 || r == 0.0)
        throw std::domain_error("closed_form_rectangle has poles on 1-au=0, 1-bv=0, 1-au-bv=0");
    return a * b * (2.0 - a * w.u - b * w.v) / (p * q * r);
}

// ---- polygons -------------------------------------------------------------------

namespace {

QPoly2 vertex_line(const Point2& v) { return QPoly2::affine(Rational(1), -v.x, -v.y); }

}  // namespace

QPoly2 vertex_line_product(const Polypol& p) {
    QPoly2 prod(Rational(1));
    for (const auto& a : p.arcs()) prod *= vertex_line(a.start());
    return prod;
}

RatFunc2 polygon_transform_exact(const Polypol& p) {
    if (!p.is_polygon()) throw std::invalid_argument("polygon_transform_exact needs a polygonal region");
    const auto& arcs = p.arcs();
    const std::size_t n = arcs.size();
    std::vector<QPoly2> ell;
    for (const auto& a : arcs) ell.push_back(vertex_line(a.start()));
    // edge k runs from corner k to corner k+1
    QPoly2 num;
    for (std::size_t k = 0; k < n; ++k) {
        Rational dy = arcs[k].end().y - arcs[k].start().y;
        if (dy.is_zero()) continue;
        QPoly2 term(dy);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k && j != (k + 1) % n) term *= ell[j];
        num += term;
    }
    // the sum telescopes at u = 0, so u divides the numerator
    auto [q, r] = divmod(num, QPoly2::x());
    if (!r.is_zero()) throw std::logic_error("polygon transform numerator not divisible by u");
    // the denominator is a product of distinct linear factors: cancel by trial division
    QPoly2 den(Rational(1));
    for (const auto& l : ell) {
        if (l.is_constant()) continue;
        auto [qq, rr] = divmod(q, l);
        if (rr.is_zero()) q = std::move(qq);
        else den *= l;
    }
    return RatFunc2::from_coprime(q, den);
}

int locate_point(const Polypol& poly, const Point2& q) {
    bool inside = false;
    for (const auto& arc : poly.arcs()) {
        if (!arc.is_segment()) throw std::invalid_argument("locate_point needs a polygon");
        Point2 a = arc.start(), b = arc.end();
        Rational cr = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
        if (cr.is_zero() && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
            q.y <= std::max(a.y, b.y))
            return 0;
        if ((a.y > q.y) != (b.y > q.y)) {
            // x-coordinate of the edge at height q.y compared with q.x
            Rational xint = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < xint) inside = !inside;
        }
    }
    return inside ? 1 : -1;
}

nlohmann::json PolarDualityResult::to_json() const {
    return {{"F", ratfunc2_to_json(transform)},
            {"adjoint", poly2_to_json(adjoint)},
            {"adjoint_text", polypol::to_string(adjoint, "u", "v")},
            {"degree", degree},
            {"vertex_count", vertex_count},
            {"degree_ok", degree_ok}};
}

PolarDualityResult polar_duality_check(const Polypol& p) {
    if (!p.is_polygon()) throw std::invalid_argument("polar_duality_check needs a polygonal region");
    if (locate_point(p, {Rational(0), Rational(0)}) != 1)
        throw std::invalid_argument("polar_duality_check: the origin must lie strictly inside the polygon");
    PolarDualityResult out;
    out.transform = polygon_transform_exact(p);
    auto [a, r] = divmod(out.transform.num() * vertex_line_product(p), out.transform.den());
    if (!r.is_zero())
        throw std::logic_error("invariant violation: F_P times the vertex-line product is not a polynomial");
    out.adjoint = a;
    out.degree = a.total_degree();
    out.vertex_count = static_cast<int>(p.arcs().size());
    out.degree_ok = out.degree <= std::max(out.vertex_count - 3, 0);
    return out;
}

}  // namespace polypol
