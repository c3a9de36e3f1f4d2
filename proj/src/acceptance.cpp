#include "polypol/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "polypol/canonical.hpp"
#include "polypol/harmonic.hpp"

namespace polypol {

namespace {

const double pi = std::numbers::pi;

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// 21×21 grid on [−1/2, 1/2]² restricted to u² + v² ≤ 1/4
std::vector<DualPoint> disk_grid() {
    std::vector<DualPoint> out;
    for (int i = -10; i <= 10; ++i)
        for (int j = -10; j <= 10; ++j) {
            double u = 0.05 * i, v = 0.05 * j;
            if (u * u + v * v <= 0.25 + 1e-12) out.push_back({u, v});
        }
    return out;
}

// Star-shaped about the origin with the origin strictly inside.
Polypol random_star_polygon(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> r(0.5, 2.0), jitter(-0.3, 0.3);
    std::vector<Point2> v;
    for (int k = 0; k < n; ++k) {
        double ang = 2 * pi * (k + 0.5 + jitter(rng)) / n;
        double rad = r(rng);
        v.push_back({rationalize(rad * std::cos(ang), 1e-3), rationalize(rad * std::sin(ang), 1e-3)});
    }
    return polygon(v);
}

Rational shoelace(const std::vector<Point2>& v) {
    Rational s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& p = v[k];
        const auto& q = v[(k + 1) % v.size()];
        s += p.x * q.y - p.y * q.x;
    }
    return s / Rational(2);
}

const QPoly2 U = QPoly2::x();
const QPoly2 V = QPoly2::y();
const QPoly2 ONE(Rational(1));

QPoly2 product(const std::vector<QPoly2>& fs) {
    QPoly2 p = ONE;
    for (const auto& f : fs) p = p * f;
    return p;
}

// ---- 1–5: closed forms ----------------------------------------------------------

Outcome triangle_transform(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> d(-0.3, 0.3);
    Polypol t = standard_triangle();
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        double u = d(rng), v = d(rng);
        worst = std::max(worst, rel_err(transform_eval(t, {u, v}, cfg.transform_options()).value,
                                        1.0 / ((1 - u) * (1 - v))));
    }
    return {worst <= 1e-10, "100 points, max rel err " + sci(worst)};
}

Outcome disk_transform(const RunConfig& cfg) {
    Polypol d = unit_disk();
    auto opts = cfg.transform_options();
    double worst = 0.0;
    auto grid = disk_grid();
    for (auto w : grid)
        worst = std::max(worst, rel_err(transform_eval(d, w, opts).value,
                                        2 * pi / std::pow(1 - w.u * w.u - w.v * w.v, 1.5)));
    double origin = std::abs(transform_eval(d, {0, 0}, opts).value - 2 * pi);
    return {worst <= 1e-9 && origin <= 1e-12,
            std::to_string(grid.size()) + " points, max rel err " + sci(worst) + ", |F(0,0)-2pi| " + sci(origin)};
}

double half_disk_boxed(double u, double v) {
    double r2 = 1 - u * u - v * v, rho = std::sqrt(r2);
    return (pi + 2 * std::atan(v / rho)) / (r2 * rho) + 2 * v / ((1 - u * u) * r2);
}

Outcome half_disk_transform(const RunConfig& cfg) {
    Polypol h = upper_half_disk();
    auto opts = cfg.transform_options();
    double worst = 0.0;
    for (auto w : disk_grid())
        worst = std::max(worst, rel_err(transform_eval(h, w, opts).value, half_disk_boxed(w.u, w.v)));
    double origin = std::abs(transform_eval(h, {0, 0}, opts).value - pi);
    return {worst <= 1e-8 && origin <= 1e-10, "max rel err " + sci(worst) + ", |F(0,0)-pi| " + sci(origin)};
}

Outcome rectangle_transform(const RunConfig& cfg) {
    auto opts = cfg.transform_options();
    Outcome out;
    const std::pair<Rational, Rational> sizes[] = {{1, 1}, {1, 2}, {3, Rational(1, 2)}};
    for (const auto& [a, b] : sizes) {
        Polypol r = rectangle(a, b);
        double A = a.to_double(), B = b.to_double(), worst = 0.0;
        int count = 0;
        for (int i = -10; i <= 10; ++i)
            for (int j = -10; j <= 10; ++j) {
                if (i == 0 || j == 0) continue;
                double u = 0.02 * i, v = 0.02 * j;
                double boxed = (1 / (1 - A * u - B * v) - 1 / (1 - A * u) - 1 / (1 - B * v) + 1) / (u * v);
                worst = std::max(worst, rel_err(transform_eval(r, {u, v}, opts).value, boxed));
                ++count;
            }
        double origin = std::abs(transform_eval(r, {0, 0}, opts).value - 2 * A * B);
        bool ok = worst <= 1e-10 && origin <= 1e-10;
        out.passed = out.passed && ok;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("(") + a.to_string() + "," + b.to_string() +
                      "): " + std::to_string(count) + " points rel " + sci(worst) + ", origin " + sci(origin);
    }
    return out;
}

Outcome sector_transform(const RunConfig& cfg) {
    auto opts = cfg.transform_options();
    struct Case {
        std::string shape;
        double phi0, phi1;
    };
    const Case cases[] = {{"sector-tau:0,1", 0.0, pi / 2},
                          {"sector-tau:1/4,3", 2 * std::atan(0.25), 2 * std::atan(3.0)},
                          {"sector:0.3,2.5", 0.3, 2.5}};
    Outcome out;
    for (const auto& c : cases) {
        Polypol s = builder_by_name(c.shape);
        double t0 = std::tan(c.phi0 / 2), t1 = std::tan(c.phi1 / 2), worst = 0.0;
        for (auto w : disk_grid()) {
            const double u = w.u, v = w.v, r2 = 1 - u * u - v * v, rho = std::sqrt(r2);
            auto A = [&](double x) {
                return 2 * std::atan(x / rho) / (r2 * rho) +
                       (2 * x * (u + u * u + v * v) / r2 - 2 * v) / ((1 + u) * (x * x + r2));
            };
            double want = A((1 + u) * t1 - v) - A((1 + u) * t0 - v);
            worst = std::max(worst, rel_err(transform_eval(s, w, opts).value, want));
        }
        double origin = std::abs(transform_eval(s, {0, 0}, opts).value - (c.phi1 - c.phi0));
        out.passed = out.passed && worst <= 1e-8 && origin <= 1e-10;
        out.detail += (out.detail.empty() ? "" : "; ") + c.shape + ": rel " + sci(worst) + ", origin " + sci(origin);
    }
    return out;
}

// ---- 6–8: structural checks -----------------------------------------------------

struct KnownArea {
    const char* shape;
    double area;
};

const KnownArea builder_areas[] = {
    {"triangle", 0.5},          {"square", 4.0},          {"hexagon", 3.0},
    {"rectangle:1,2", 2.0},     {"rectangle:3,1/2", 1.5}, {"disk", pi},
    {"half-disk", pi / 2},      {"sector:0.3,2.5", 1.1},  {"sector-tau:1/4,3", std::atan(3.0) - std::atan(0.25)},
};

Outcome normalization(const RunConfig& cfg) {
    auto opts = cfg.transform_options();
    double worst = 0.0;
    for (const auto& k : builder_areas)
        worst = std::max(worst, std::abs(transform_eval(builder_by_name(k.shape), {0, 0}, opts).value - 2 * k.area));
    std::mt19937_64 rng(cfg.seed + 6);
    std::uniform_int_distribution<int> nv(3, 10);
    for (int k = 0; k < 20; ++k) {
        Polypol p = random_star_polygon(rng, nv(rng));
        double area = shoelace(p.polygon_vertices()).to_double();
        worst = std::max(worst, std::abs(transform_eval(p, {0, 0}, opts).value - 2 * area));
    }
    return {worst <= 1e-10, std::to_string(std::size(builder_areas)) + " builders + 20 random polygons, max |F(0,0)-2A| " +
                                sci(worst)};
}

Outcome series_consistency(const RunConfig& cfg) {
    auto opts = cfg.transform_options();
    const DualPoint pts[] = {{0, 0}, {0.05, 0}, {0, -0.05}, {0.025, 0.025}, {-0.03, 0.02}, {0.01, -0.04}, {-0.02, -0.03}};
    double worst = 0.0;
    for (const auto& k : builder_areas) {
        Polypol p = builder_by_name(k.shape);
        SeriesExpansion s = transform_series(p, 8, opts.quad);
        for (auto w : pts) {
            double f = transform_eval(p, w, opts).value;
            worst = std::max(worst, std::abs(s.eval(w.u, w.v) - f) / std::max(1.0, std::abs(f)));
        }
    }
    return {worst <= 1e-6, "order 8, max gap " + sci(worst)};
}

Outcome polar_duality(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed + 8);
    std::uniform_int_distribution<int> nv(3, 8);
    int failures = 0, max_degree = -1;
    for (int k = 0; k < 100; ++k) {
        const int n = nv(rng);
        Polypol p = random_star_polygon(rng, n);
        auto verts = p.polygon_vertices();
        std::vector<QPoly2> ell;
        for (const auto& q : verts) ell.push_back(ONE - q.x * U - q.y * V);
        // fan from the origin: the triangle (0, A, B) contributes det(A, B)/(ℓ_A ℓ_B)
        QPoly2 fan;
        for (int i = 0; i < n; ++i) {
            const auto& a = verts[static_cast<std::size_t>(i)];
            const auto& b = verts[static_cast<std::size_t>((i + 1) % n)];
            QPoly2 term(a.x * b.y - a.y * b.x);
            for (int m = 0; m < n; ++m)
                if (m != i && m != (i + 1) % n) term = term * ell[static_cast<std::size_t>(m)];
            fan += term;
        }
        RatFunc2 F = polygon_transform_exact(p);
        auto [q, r] = divmod(F.num() * product(ell), F.den());
        auto check = polar_duality_check(p);
        bool ok = r.is_zero() && q == fan && check.adjoint == fan && fan.total_degree() <= n - 3 && check.degree_ok;
        max_degree = std::max(max_degree, fan.total_degree() - (n - 3));
        if (!ok) ++failures;
    }
    return {failures == 0, "100 polygons, " + std::to_string(failures) + " failures, max deg-(n-3) = " +
                               std::to_string(max_degree)};
}

// ---- 9–11: canonical forms, adjoints, dual curves ----------------------------------

Outcome canonical_forms(const RunConfig&) {
    struct Case {
        const char* shape;
        Rational numerator;
        QPoly2 boundary;
    };
    const Case cases[] = {{"triangle", Rational(1), U * V * (ONE - U - V)},
                          {"square", Rational(4), (ONE - U * U) * (ONE - V * V)},
                          {"half-disk", Rational(2), V * (ONE - U * U - V * V)}};
    Outcome out;
    int residues = 0;
    double contour = 0.0;
    for (const auto& c : cases) {
        Polypol p = builder_by_name(c.shape);
        auto form = canonical_form(p);
        // κA/∏factors = c/B  ⇔  κA·B = c·∏factors
        bool same = form.exact && form.kappa.exact &&
                    (*form.kappa.exact) * form.numerator * c.boundary == c.numerator * product(form.denominator_factors);
        bool signs = true;
        for (const auto& v : p.genuine_vertices()) {
            Number r = iterated_residue(form, v);
            signs = signs && r.exact && (*r.exact == Rational(1) || *r.exact == Rational(-1));
            contour = std::max(contour, std::abs(iterated_residue_contour(form, v) - std::complex<double>(r.value)));
            ++residues;
        }
        out.passed = out.passed && same && signs;
        out.detail += std::string(c.shape) + " kappa=" + form.kappa.to_string() + (same ? "" : " (form mismatch)") +
                      (signs ? "" : " (residue not +-1)") + "; ";
    }
    out.passed = out.passed && contour <= 1e-6;
    out.detail += std::to_string(residues) + " residues, contour gap " + sci(contour);
    return out;
}

Outcome adjoint_interpolation(const RunConfig&) {
    Outcome out;
    for (const char* shape : {"triangle", "square", "half-disk"}) {
        Adjoint a = adjoint_curve(builder_by_name(shape));
        bool ok = a.exact && a.numerator.is_constant() && !a.numerator.is_zero() && a.points.balanced();
        out.passed = out.passed && ok;
        out.detail += std::string(shape) + ": d-3=" + std::to_string(a.degree) + ", " +
                      std::to_string(a.points.points.size()) + " residual points, " +
                      (a.points.balanced() ? "balanced" : "UNBALANCED") + (ok ? "" : " (fail)") + "; ";
    }
    Adjoint h = adjoint_curve(hexagon());
    out.passed = out.passed && h.points.balanced();
    out.detail += "hexagon Bezout " + std::string(h.points.balanced() ? "balanced" : "UNBALANCED");
    return out;
}

bool proportional_to(const QPoly2& a, const QPoly2& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const auto& [m, c] = b.first_term();
    Rational s = a.coeff(m.i, m.j) / c;
    return !s.is_zero() && a == s * b;
}

Outcome dual_curves(const RunConfig&) {
    const QPoly2 conic = ONE - U * U - V * V;
    auto d = singular_support(unit_disk());
    bool disk_ok = d.vertex_lines.empty() && d.dual_curves.size() == 1 && proportional_to(d.dual_curves[0], conic);
    auto h = singular_support(upper_half_disk());
    bool lines_ok = h.vertex_lines.size() == 2;
    for (const QPoly2& want : {ONE - U, ONE + U}) {
        bool found = false;
        for (const auto& l : h.vertex_lines) found = found || proportional_to(l.line, want);
        lines_ok = lines_ok && found;
    }
    bool half_ok = lines_ok && h.dual_curves.size() == 1 && proportional_to(h.dual_curves[0], conic);
    return {disk_ok && half_ok, std::string("disk: ") + (disk_ok ? "{1-u^2-v^2}" : "mismatch") +
                                    ", half-disk: " + (half_ok ? "{1-u, 1+u} + conic" : "mismatch")};
}

// ---- 12–14: exponents, scan, harmonic -----------------------------------------------

Outcome exponent_probe(const RunConfig& cfg) {
    ProbeOptions po;
    po.transform.root_margin = cfg.root_tol;
    auto disk = probe_exponent(unit_disk(), ONE - U * U - V * V, {1.0, 0.0}, {-1.0, 0.0}, po);
    auto tri = probe_exponent(standard_triangle(), ONE - U, {1.0, 0.0}, {-1.0, 0.0}, po);
    bool ok = std::abs(disk.exponent + 1.5) <= 0.05 && std::abs(tri.exponent + 1.0) <= 0.05;
    return {ok, "disk conic " + std::to_string(disk.exponent) + " (" + to_string(disk.classification) +
                    "), triangle u=1 " + std::to_string(tri.exponent) + " (" + to_string(tri.classification) + ")"};
}

Outcome scan_containment(const RunConfig& cfg) {
    Outcome out;
    out.detail = "numeric evidence, not a proof";
    for (const char* shape : {"triangle", "half-disk", "disk", "square"}) {
        auto rep = conjecture_scan(builder_by_name(shape), 101, -2.0, 2.0, cfg.scan_options());
        out.passed = out.passed && rep.containment();
        out.detail += std::string("; ") + shape + ": flagged " + std::to_string(rep.flagged) + " (outside " +
                      std::to_string(rep.flagged_outside) + "), refused " + std::to_string(rep.refused) +
                      ", frontier near support " + std::to_string(rep.frontier_near_support) + "/" +
                      std::to_string(rep.frontier);
    }
    return out;
}

Outcome restriction_identity(const RunConfig& cfg) {
    auto q = cfg.quadrature_options();
    auto tri = restriction_identity_check(standard_triangle(), 10, 1e-9, q);
    auto rect = restriction_identity_check(rectangle(Rational(1), Rational(2)), 10, 1e-9, q);
    auto disk = restriction_identity_check(unit_disk(), 10, 1e-9, q);

    // F_Δ = Σ u^a v^b, so the t^j coefficient of F_Δ(t, it) is Σ_{l≤j} i^l
    bool tri_oracle = tri.exact;
    GaussRational il(1), partial;
    for (const auto& e : tri.entries) {
        partial += il;
        il = il * GaussRational(Rational(0), Rational(1));
        tri_oracle = tri_oracle && e.restricted.exact && *e.restricted.exact == partial;
    }
    double mu_max = 0.0;
    auto h = harmonic_moments(unit_disk(), 10, q);
    for (int j = 1; j <= 10; ++j) mu_max = std::max(mu_max, std::abs(h.mu[static_cast<std::size_t>(j)].value));

    bool ok = tri.passed() && tri.exact && rect.passed() && rect.exact && disk.passed() && tri_oracle &&
              mu_max <= 1e-12;
    return {ok, std::string("triangle ") + (tri.passed() && tri_oracle ? "exact match" : "mismatch") + ", rectangle " +
                    (rect.passed() && rect.exact ? "exact match" : "mismatch") + ", disk " +
                    (disk.passed() ? "within 1e-9" : "mismatch") + ", max |mu_j| (disk, j>=1) " + sci(mu_max)};
}

struct Criterion {
    const char* name;
    Outcome (*run)(const RunConfig&);
};

const Criterion criteria[acceptance_criterion_count] = {
    {"triangle transform", triangle_transform},
    {"disk transform", disk_transform},
    {"half-disk transform", half_disk_transform},
    {"rectangle transform", rectangle_transform},
    {"sector transform", sector_transform},
    {"normalization F(0,0) = 2 area", normalization},
    {"series/evaluation consistency", series_consistency},
    {"polygon polar duality", polar_duality},
    {"canonical forms and residues", canonical_forms},
    {"adjoint interpolation", adjoint_interpolation},
    {"dual curves", dual_curves},
    {"exponent probe", exponent_probe},
    {"conjecture scan containment", scan_containment},
    {"harmonic restriction identity", restriction_identity},
};

}  // namespace

const char* acceptance_criterion_name(int id) {
    if (id < 1 || id > acceptance_criterion_count) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    return criteria[id - 1].name;
}

nlohmann::json CriterionResult::to_json() const {
    return {{"id", id}, {"name", name}, {"passed", passed}, {"detail", detail}};
}

bool AcceptanceReport::passed() const {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

std::string AcceptanceReport::table() const {
    std::ostringstream os;
    for (const auto& r : results)
        os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " - " << r.detail
           << "\n";
    return os.str();
}

nlohmann::json AcceptanceReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) rows.push_back(r.to_json());
    return {{"config", config.to_json()}, {"passed", passed()}, {"criteria", rows}};
}

AcceptanceReport run_acceptance(const RunConfig& config, const std::vector<int>& selected) {
    config.validate();
    std::vector<int> ids = selected;
    if (ids.empty())
        for (int i = 1; i <= acceptance_criterion_count; ++i) ids.push_back(i);
    AcceptanceReport rep;
    rep.config = config;
    for (int id : ids) {
        CriterionResult r;
        r.id = id;
        r.name = acceptance_criterion_name(id);
        try {
            Outcome o = criteria[id - 1].run(config);
            r.passed = o.passed;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

}  // namespace polypol
