#include "polypol/canonical.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace polypol {

using C = std::complex<double>;

// ---- boundary equation ------------------------------------------------------

int BoundaryEquation::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.total_degree();
    return d;
}

QPoly2 BoundaryEquation::product() const {
    QPoly2 b(Rational(1));
    for (const auto& f : factors) b = b * f;
    return b;
}

BoundaryEquation boundary_components(const Polypol& p) {
    BoundaryEquation out;
    for (const auto& arc : p.arcs()) {
        QPoly2 f = implicitize(arc);
        int idx = -1;
        for (std::size_t k = 0; k < out.factors.size(); ++k)
            if (proportional(out.factors[k], f)) idx = static_cast<int>(k);
        if (idx < 0) {
            idx = static_cast<int>(out.factors.size());
            out.factors.push_back(f);
        }
        out.arc_factor.push_back(idx);
    }
    return out;
}

std::vector<QPoly2> boundary_equation(const Polypol& p) { return boundary_components(p).factors; }

// ---- projective intersections -----------------------------------------------

namespace {

using Mat3 = std::array<std::array<long, 3>, 3>;

QPoly2 power(const QPoly2& p, int k) {
    QPoly2 out(Rational(1));
    for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

// Deterministic sequence of invertible integer changes of coordinates.
Mat3 coordinate_change(int attempt) {
    std::mt19937 rng(static_cast<unsigned>(7919 + 104729 * attempt));
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        Mat3 m;
        for (auto& row : m)
            for (auto& e : row) e = d(rng);
        long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0) return m;
    }
}

// F^h(M·(X, Y, 1)) as a polynomial in X, Y.
QPoly2 transform(const QPoly2& f, const Mat3& m) {
    const int d = f.total_degree();
    std::array<QPoly2, 3> lin;
    for (int r = 0; r < 3; ++r)
        lin[static_cast<std::size_t>(r)] =
            QPoly2::affine(Rational(m[static_cast<std::size_t>(r)][2]), Rational(m[static_cast<std::size_t>(r)][0]),
                           Rational(m[static_cast<std::size_t>(r)][1]));
    QPoly2 out;
    for (const auto& [mono, c] : f.terms())
        out += c * power(lin[0], mono.i) * power(lin[1], mono.j) * power(lin[2], d - mono.degree());
    return out;
}

QPoly1 univariate_x(const QPoly2& p) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_x(), 0)) + 1, Rational(0));
    for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m.i)] = v;
    return QPoly1(std::move(c));
}

template <class T>
Poly1<T> specialize_x(const Poly1<QPoly1>& rec, const T& x0) {
    std::vector<T> c;
    for (const auto& q : rec.coefficients()) c.push_back(q.template eval_as<T>(x0));
    return Poly1<T>(std::move(c));
}

struct RawPoint {
    ProjPoint p;
    std::optional<ExactProjPoint> exact;
    int mult = 1;
};

ExactProjPoint normalize(ExactProjPoint q) {
    if (!q[2].is_zero()) return {q[0] / q[2], q[1] / q[2], Rational(1)};
    if (!q[1].is_zero()) return {q[0] / q[1], Rational(1), Rational(0)};
    return {Rational(1), Rational(0), Rational(0)};
}

ProjPoint normalize(ProjPoint q) {
    double scale = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    for (auto& e : q)
        if (std::abs(e) < 1e-12 * scale) e = 0.0;
    if (q[2] != 0.0) return {q[0] / q[2], q[1] / q[2], 1.0};
    if (q[1] != 0.0) return {q[0] / q[1], 1.0, 0.0};
    return {1.0, 0.0, 0.0};
}

ProjPoint to_complex(const ExactProjPoint& q) {
    return {C(q[0].to_double()), C(q[1].to_double()), C(q[2].to_double())};
}

// Isolated common root of h1, h2 over C, or nullopt if there is none or several.
std::optional<C> common_root(const Poly1<C>& h1, const Poly1<C>& h2) {
    double norm2 = 0.0;
    for (const auto& c : h2.coefficients()) norm2 += std::abs(c);
    std::vector<C> hits;
    for (C y : complex_roots(h1)) {
        double scale = norm2 * std::pow(std::max(1.0, std::abs(y)), h2.degree());
        if (std::abs(h2.eval_as<C>(y)) <= 1e-6 * scale) hits.push_back(y);
    }
    if (hits.empty()) return std::nullopt;
    C mean = 0.0;
    for (C y : hits) mean += y;
    mean /= static_cast<double>(hits.size());
    for (C y : hits)
        if (std::abs(y - mean) > 1e-5 * (1.0 + std::abs(mean))) return std::nullopt;
    return mean;
}

// Newton on the transversal system f = g = 0.
void polish(const Poly2<C>& f, const Poly2<C>& g, C& x, C& y) {
    Poly2<C> fx = f.dx(), fy = f.dy(), gx = g.dx(), gy = g.dy();
    for (int it = 0; it < 4; ++it) {
        C a = fx.eval_as<C>(x, y), b = fy.eval_as<C>(x, y), c = gx.eval_as<C>(x, y), d = gy.eval_as<C>(x, y);
        C det = a * d - b * c;
        if (std::abs(det) < 1e-14) return;
        C F = f.eval_as<C>(x, y), G = g.eval_as<C>(x, y);
        x -= (d * F - b * G) / det;
        y -= (a * G - c * F) / det;
    }
}

std::optional<std::vector<RawPoint>> try_intersect(const QPoly2& F, const QPoly2& G, const Mat3& m) {
    const int df = F.total_degree(), dg = G.total_degree();
    QPoly2 f = transform(F, m), g = transform(G, m);
    if (f.degree_y() != df || g.degree_y() != dg) return std::nullopt;  // [0:1:0] on a curve
    Poly1<QPoly1> fr = to_recursive_in_y(f), gr = to_recursive_in_y(g);
    auto lift = [](const Poly1<QPoly1>& r) {
        std::vector<QPoly2> c;
        for (const auto& q : r.coefficients()) c.push_back(from_univariate_x(q));
        return TauPoly(std::move(c));
    };
    QPoly1 res = univariate_x(resultant_in_tau(lift(fr), lift(gr)));
    if (res.is_zero()) throw std::invalid_argument("boundary factors share a component");
    if (res.degree() != df * dg) return std::nullopt;  // intersection on the new line at infinity

    auto back = [&](const std::array<C, 3>& q) {
        ProjPoint out;
        for (std::size_t r = 0; r < 3; ++r)
            out[r] = static_cast<double>(m[r][0]) * q[0] + static_cast<double>(m[r][1]) * q[1] +
                     static_cast<double>(m[r][2]) * q[2];
        return normalize(out);
    };

    std::vector<RawPoint> out;
    auto factors = squarefree_decomposition(res);
    Poly2<C> fc = f.cast<C>(), gc = g.cast<C>();
    for (std::size_t k = 0; k < factors.size(); ++k) {
        QPoly1 rest = factors[k];
        if (rest.degree() <= 0) continue;
        const int mult = static_cast<int>(k) + 1;
        for (const auto& root : rational_roots(rest)) {
            const Rational& x0 = root.first;
            rest = exact_quotient(rest, QPoly1{-x0, Rational(1)});
            QPoly1 h = gcd(specialize_x<Rational>(fr, x0), specialize_x<Rational>(gr, x0));
            if (h.degree() != 1) return std::nullopt;
            Rational y0 = -h.coefficients()[0] / h.coefficients()[1];
            ExactProjPoint q;
            for (std::size_t r = 0; r < 3; ++r) q[r] = Rational(m[r][0]) * x0 + Rational(m[r][1]) * y0 + Rational(m[r][2]);
            q = normalize(q);
            out.push_back({to_complex(q), q, mult});
        }
        for (C x0 : complex_roots(rest)) {
            auto y0 = common_root(specialize_x<C>(fr, x0), specialize_x<C>(gr, x0));
            if (!y0) return std::nullopt;
            C x = x0, y = *y0;
            if (mult == 1) polish(fc, gc, x, y);
            out.push_back({back({x, y, C(1.0)}), std::nullopt, mult});
        }
    }
    return out;
}

std::vector<RawPoint> intersect(const QPoly2& F, const QPoly2& G) {
    for (int attempt = 0; attempt < 64; ++attempt)
        if (auto pts = try_intersect(F, G, coordinate_change(attempt))) return *pts;
    throw std::runtime_error("no generic projection found for an intersection");
}

nlohmann::json complex_json(C z) { return nlohmann::json::array({z.real(), z.imag()}); }

bool same_point(const ResidualPoint& a, const ResidualPoint& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    double scale = 1.0;
    for (std::size_t r = 0; r < 3; ++r) scale = std::max({scale, std::abs(a.point[r]), std::abs(b.point[r])});
    for (std::size_t r = 0; r < 3; ++r)
        if (std::abs(a.point[r] - b.point[r]) > 1e-9 * scale) return false;
    return true;
}

}  // namespace

nlohmann::json ResidualPoint::to_json() const {
    nlohmann::json j;
    if (exact) {
        j["point"] = {rational_to_json((*exact)[0]), rational_to_json((*exact)[1]), rational_to_json((*exact)[2])};
    } else {
        j["point"] = {complex_json(point[0]), complex_json(point[1]), complex_json(point[2])};
    }
    j["source"] = {source.first, source.second};
    j["multiplicity"] = multiplicity;
    return j;
}

bool ResidualAnalysis::balanced() const {
    for (const auto& c : counts)
        if (!c.balanced()) return false;
    return true;
}

nlohmann::json ResidualAnalysis::to_json() const {
    nlohmann::json pts = nlohmann::json::array(), bez = nlohmann::json::array();
    for (const auto& p : points) pts.push_back(p.to_json());
    for (const auto& c : counts)
        bez.push_back({{"pair", {c.first, c.second}},
                       {"expected", c.expected},
                       {"at_vertices", c.at_vertices},
                       {"residual", c.residual},
                       {"balanced", c.balanced()}});
    return {{"points", pts}, {"bezout", bez}};
}

ResidualAnalysis residual_points(const std::vector<QPoly2>& factors, const std::vector<Vertex>& vertices) {
    ResidualAnalysis out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            BezoutCount count;
            count.first = static_cast<int>(i);
            count.second = static_cast<int>(j);
            count.expected = factors[i].total_degree() * factors[j].total_degree();
            for (auto& raw : intersect(factors[i], factors[j])) {
                bool at_vertex = false;
                if (raw.exact && !(*raw.exact)[2].is_zero())
                    for (const auto& v : vertices)
                        if (!v.smooth_joint && (*raw.exact)[0] == v.point.x && (*raw.exact)[1] == v.point.y)
                            at_vertex = true;
                if (at_vertex) {
                    count.at_vertices += raw.mult;
                    continue;
                }
                count.residual += raw.mult;
                out.points.push_back({raw.p, raw.exact, {count.first, count.second}, raw.mult});
            }
            out.counts.push_back(count);
        }
    }
    return out;
}

// ---- adjoint ----------------------------------------------------------------

namespace {

struct Mono3 {
    int a, b, c;
};

std::vector<Mono3> monomials3(int n) {
    std::vector<Mono3> out;
    for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
    return out;
}

long falling(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

template <class T>
T ipow(const T& x, int k) {
    T r = RingTraits<T>::one();
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

// Rows ∂^(α,β,γ) of every monomial at the point, for α+β+γ < mult.
template <class T>
std::vector<std::vector<T>> vanishing_rows(const std::array<T, 3>& p, int mult, const std::vector<Mono3>& mons) {
    std::vector<std::vector<T>> rows;
    for (int order = 0; order < mult; ++order)
        for (const auto& d : monomials3(order)) {
            std::vector<T> row;
            for (const auto& m : mons) {
                if (m.a < d.a || m.b < d.b || m.c < d.c) {
                    row.push_back(RingTraits<T>::zero());
                    continue;
                }
                T coef = coerce<T>(Rational(falling(m.a, d.a) * falling(m.b, d.b) * falling(m.c, d.c)));
                row.push_back(coef * ipow(p[0], m.a - d.a) * ipow(p[1], m.b - d.b) * ipow(p[2], m.c - d.c));
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, std::size_t cols) {
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& e : a[r]) e *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

QPoly2 normalize_first(const QPoly2& p) { return p * (Rational(1) / p.first_term().second); }

}  // namespace

Adjoint adjoint_curve(const Polypol& p) {
    BoundaryEquation be = boundary_components(p);
    const int d = be.degree();
    if (d < 3) throw std::invalid_argument("adjoint needs boundary degree at least 3, got " + std::to_string(d));
    Adjoint out;
    out.degree = d - 3;
    out.points = residual_points(be.factors, p.genuine_vertices());

    // each point once; k components through a point force order k − 1
    std::vector<ResidualPoint> pts;
    std::vector<std::set<int>> through;
    for (const auto& q : out.points.points) {
        auto it = std::find_if(pts.begin(), pts.end(), [&](const ResidualPoint& r) { return same_point(r, q); });
        if (it == pts.end()) {
            pts.push_back(q);
            through.push_back({q.source.first, q.source.second});
            continue;
        }
        auto k = static_cast<std::size_t>(it - pts.begin());
        through[k].insert({q.source.first, q.source.second});
        it->multiplicity = std::max({it->multiplicity, q.multiplicity, static_cast<int>(through[k].size()) - 1});
    }
    const auto mons = monomials3(out.degree);
    const std::size_t cols = mons.size();
    out.exact = std::all_of(pts.begin(), pts.end(), [](const ResidualPoint& q) { return q.exact.has_value(); });

    std::vector<double> sol(cols, 0.0);
    QPoly2 num;
    if (out.exact) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& q : pts)
            for (auto& r : vanishing_rows<Rational>(*q.exact, q.multiplicity, mons)) rows.push_back(std::move(r));
        auto basis = nullspace(rows, cols);
        if (basis.size() != 1) throw NonUniqueAdjoint(static_cast<int>(basis.size()));
        for (std::size_t k = 0; k < cols; ++k) num.add_term({mons[k].a, mons[k].b}, basis[0][k]);
    } else {
        std::vector<std::vector<C>> crow;
        for (const auto& q : pts)
            for (auto& r : vanishing_rows<C>(q.point, q.multiplicity, mons)) crow.push_back(std::move(r));
        Eigen::MatrixXd m(static_cast<Eigen::Index>(2 * crow.size()), static_cast<Eigen::Index>(cols));
        for (std::size_t i = 0; i < crow.size(); ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                double scale = 0.0;
                for (const auto& e : crow[i]) scale = std::max(scale, std::abs(e));
                m(static_cast<Eigen::Index>(2 * i), static_cast<Eigen::Index>(k)) = crow[i][k].real() / scale;
                m(static_cast<Eigen::Index>(2 * i + 1), static_cast<Eigen::Index>(k)) = crow[i][k].imag() / scale;
            }
        int rank = 0;
        Eigen::VectorXd v;
        if (m.rows() == 0) {
            v = Eigen::VectorXd::Unit(static_cast<Eigen::Index>(cols), 0);
        } else {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
            const auto& s = svd.singularValues();
            for (Eigen::Index i = 0; i < s.size(); ++i)
                if (s(i) > 1e-9 * s(0)) ++rank;
            v = svd.matrixV().col(static_cast<Eigen::Index>(cols) - 1);
        }
        const int dim = static_cast<int>(cols) - rank;
        if (dim != 1) throw NonUniqueAdjoint(dim);
        double big = v.cwiseAbs().maxCoeff();
        for (std::size_t k = 0; k < cols; ++k) {
            double c = v(static_cast<Eigen::Index>(k)) / big;
            if (std::abs(c) > 1e-12) num.add_term({mons[k].a, mons[k].b}, rationalize(c, 1e-15));
        }
    }
    out.numerator = normalize_first(num);

    // residual at the (normalized) points, relative to the coefficient size
    double coef = 0.0;
    for (const auto& [m, c] : out.numerator.terms()) coef += std::abs(c.to_double());
    for (const auto& q : out.points.points) {
        double scale = std::max({std::abs(q.point[0]), std::abs(q.point[1]), std::abs(q.point[2])});
        C val = out.numerator.eval_homogeneous<C>(q.point[0], q.point[1], q.point[2], out.degree);
        out.residual = std::max(out.residual, std::abs(val) / (coef * std::pow(scale, out.degree)));
    }
    return out;
}

QPoly2 adjoint(const Polypol& p) { return adjoint_curve(p).numerator; }

// ---- canonical form and residues ----------------------------------------------

nlohmann::json MeromorphicForm2::to_json() const {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& q : denominator_factors) f.push_back(poly2_to_json(q));
    return {{"kappa", number_to_json(kappa)},
            {"numerator", poly2_to_json(numerator)},
            {"factors", f},
            {"arc_factor", arc_factor},
            {"exact", exact}};
}

MeromorphicForm2 canonical_form(const Polypol& p) {
    auto vertices = p.genuine_vertices();
    if (vertices.empty())
        throw std::runtime_error(
            "region has no genuine vertex: a vertex-free boundary is not a one-dimensional positive geometry in the "
            "recursive sense, so the normalization cannot be fixed by vertex residues");
    Adjoint adj = adjoint_curve(p);
    BoundaryEquation be = boundary_components(p);
    MeromorphicForm2 form;
    form.kappa = Number(Rational(1));
    form.numerator = adj.numerator;
    form.denominator_factors = be.factors;
    form.arc_factor = be.arc_factor;
    form.exact = adj.exact;
    Number raw = iterated_residue(form, vertices.front());
    if (raw.exact) form.kappa = Number(Rational(1) / *raw.exact);
    else form.kappa = Number(1.0 / raw.value);
    return form;
}

namespace {

struct Branches {
    const QPoly2* f;
    const QPoly2* g;
    std::vector<const QPoly2*> rest;
};

Branches branches(const MeromorphicForm2& form, const Vertex& v) {
    const auto n = form.arc_factor.size();
    if (static_cast<std::size_t>(v.incoming) >= n || static_cast<std::size_t>(v.outgoing) >= n)
        throw std::invalid_argument("vertex arcs do not belong to this form");
    int fi = form.arc_factor[static_cast<std::size_t>(v.incoming)];
    int gi = form.arc_factor[static_cast<std::size_t>(v.outgoing)];
    if (fi == gi) throw NonNormalCrossing("both branches at the vertex lie on one boundary component");
    Branches b{&form.denominator_factors[static_cast<std::size_t>(fi)],
               &form.denominator_factors[static_cast<std::size_t>(gi)],
               {}};
    for (std::size_t k = 0; k < form.denominator_factors.size(); ++k)
        if (static_cast<int>(k) != fi && static_cast<int>(k) != gi) b.rest.push_back(&form.denominator_factors[k]);
    return b;
}

}  // namespace

Number iterated_residue(const MeromorphicForm2& form, const Vertex& vertex) {
    Branches br = branches(form, vertex);
    const Rational& x = vertex.point.x;
    const Rational& y = vertex.point.y;
    const QPoly2& f = *br.f;
    const QPoly2& g = *br.g;
    Rational jac = f.dx()(x, y) * g.dy()(x, y) - f.dy()(x, y) * g.dx()(x, y);
    if (jac.is_zero()) throw NonNormalCrossing("boundary branches are tangent or singular at the vertex");
    Rational rest(1);
    for (const auto* q : br.rest) rest *= (*q)(x, y);
    if (rest.is_zero()) throw NonNormalCrossing("more than two boundary components pass through the vertex");
    Rational base = form.numerator(x, y) / (jac * rest);
    if (form.exact && form.kappa.exact) return Number(*form.kappa.exact * base);
    return Number(form.kappa.value * base.to_double());
}

std::complex<double> iterated_residue_contour(const MeromorphicForm2& form, const Vertex& vertex, double radius,
                                              int nodes) {
    Branches br = branches(form, vertex);
    Poly2<C> f = br.f->cast<C>(), g = br.g->cast<C>(), num = form.numerator.cast<C>();
    Poly2<C> fx = f.dx(), fy = f.dy(), gx = g.dx(), gy = g.dy();
    std::vector<Poly2<C>> all;
    for (const auto& q : form.denominator_factors) all.push_back(q.cast<C>());
    const C x0(vertex.point.x.to_double()), y0(vertex.point.y.to_double());
    C a = fx.eval_as<C>(x0, y0), b = fy.eval_as<C>(x0, y0), c = gx.eval_as<C>(x0, y0), d = gy.eval_as<C>(x0, y0);
    C det0 = a * d - b * c;
    C sum = 0.0;
    const double h = 2 * std::numbers::pi / nodes;
    for (int j = 0; j < nodes; ++j) {
        C s = std::polar(radius, h * j);
        for (int k = 0; k < nodes; ++k) {
            C t = std::polar(radius, h * k);
            // invert (f, g) = (s, t) by Newton from the linearization
            C x = x0 + (d * s - b * t) / det0, y = y0 + (a * t - c * s) / det0;
            for (int it = 0; it < 8; ++it) {
                C A = fx.eval_as<C>(x, y), B = fy.eval_as<C>(x, y), Cc = gx.eval_as<C>(x, y), D = gy.eval_as<C>(x, y);
                C det = A * D - B * Cc;
                C F = f.eval_as<C>(x, y) - s, G = g.eval_as<C>(x, y) - t;
                C dx = (D * F - B * G) / det, dy = (A * G - Cc * F) / det;
                x -= dx;
                y -= dy;
                if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
            }
            C jac = fx.eval_as<C>(x, y) * gy.eval_as<C>(x, y) - fy.eval_as<C>(x, y) * gx.eval_as<C>(x, y);
            C den = 1.0;
            for (const auto& q : all) den *= q.eval_as<C>(x, y);
            // Ω = κA/(B·jac) ds∧dt; (2πi)^{-2} ds dt = s t dθ dφ/(4π²)
            sum += num.eval_as<C>(x, y) / (den * jac) * s * t;
        }
    }
    C kappa = form.kappa.exact ? C(form.kappa.exact->to_double()) : C(form.kappa.value);
    return kappa * sum / static_cast<double>(nodes) / static_cast<double>(nodes);
}

}  // namespace polypol
