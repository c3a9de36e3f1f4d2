#include "polypol/polypol.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace polypol {

namespace {

Poly1<double> to_float(const QPoly1& p) { return p.cast<double>(); }

QPoly1 velocity_numerator(const RatFunc1& f) {
    return f.num().derivative() * f.den() - f.num() * f.den().derivative();
}

std::string point_string(const Point2& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

}  // namespace

RationalArc::RationalArc(RatFunc1 x, RatFunc1 y, Rational a, Rational b, bool smooth_joint_end)
    : x_(std::move(x)), y_(std::move(y)), a_(std::move(a)), b_(std::move(b)), smooth_(smooth_joint_end) {
    if (!(a_ < b_)) throw std::invalid_argument("arc interval must satisfy a < b");
    nx_ = to_float(x_.num());
    dx_ = to_float(x_.den());
    ny_ = to_float(y_.num());
    dy_ = to_float(y_.den());
    nxp_ = nx_.derivative();
    dxp_ = dx_.derivative();
    nyp_ = ny_.derivative();
    dyp_ = dy_.derivative();
}

RationalArc RationalArc::segment(const Point2& p, const Point2& q) {
    return RationalArc(RatFunc1(QPoly1{p.x, q.x - p.x}), RatFunc1(QPoly1{p.y, q.y - p.y}), Rational(0), Rational(1));
}

RationalArc RationalArc::reversed() const {
    Rational s = a_ + b_;
    return RationalArc(x_.mobius(Rational(-1), s, Rational(0), Rational(1)),
                       y_.mobius(Rational(-1), s, Rational(0), Rational(1)), a_, b_, false);
}

void RationalArc::eval(double t, double& x, double& y, double& xp, double& yp) const {
    double n1 = nx_(t), d1 = dx_(t), n2 = ny_(t), d2 = dy_(t);
    x = n1 / d1;
    y = n2 / d2;
    xp = (nxp_(t) * d1 - n1 * dxp_(t)) / (d1 * d1);
    yp = (nyp_(t) * d2 - n2 * dyp_(t)) / (d2 * d2);
}

void RationalArc::eval(std::complex<double> t, std::complex<double>& x, std::complex<double>& y,
                       std::complex<double>& xp, std::complex<double>& yp) const {
    using C = std::complex<double>;
    C n1 = nx_.eval_as<C>(t), d1 = dx_.eval_as<C>(t), n2 = ny_.eval_as<C>(t), d2 = dy_.eval_as<C>(t);
    x = n1 / d1;
    y = n2 / d2;
    xp = (nxp_.eval_as<C>(t) * d1 - n1 * dxp_.eval_as<C>(t)) / (d1 * d1);
    yp = (nyp_.eval_as<C>(t) * d2 - n2 * dyp_.eval_as<C>(t)) / (d2 * d2);
}

std::vector<Vertex> Polypol::vertices() const {
    std::vector<Vertex> out;
    const int n = static_cast<int>(arcs_.size());
    for (int k = 0; k < n; ++k) {
        const auto& arc = arcs_[static_cast<std::size_t>(k)];
        out.push_back({arc.end(), k, (k + 1) % n, arc.smooth_joint_end()});
    }
    return out;
}

std::vector<Vertex> Polypol::genuine_vertices() const {
    std::vector<Vertex> out;
    for (auto& v : vertices())
        if (!v.smooth_joint) out.push_back(v);
    return out;
}

bool Polypol::is_polygon() const {
    if (arcs_.empty()) return false;
    for (const auto& a : arcs_)
        if (!a.is_segment()) return false;
    return true;
}

std::vector<Point2> Polypol::polygon_vertices() const {
    std::vector<Point2> out;
    for (const auto& a : arcs_) out.push_back(a.start());
    return out;
}

Polypol Polypol::reversed() const {
    std::vector<RationalArc> arcs;
    for (auto it = arcs_.rbegin(); it != arcs_.rend(); ++it) arcs.push_back(it->reversed());
    // the joint flag belongs to the vertex, which now ends the preceding arc
    const std::size_t n = arcs_.size();
    for (std::size_t k = 0; k < n; ++k) {
        // reversed arc k ends where original arc n−1−k started, i.e. original vertex n−2−k
        std::size_t orig_vertex = (2 * n - 2 - k) % n;
        arcs[k].set_smooth_joint_end(arcs_[orig_vertex].smooth_joint_end());
    }
    return Polypol(std::move(arcs), tier_, name_.empty() ? name_ : name_ + "-reversed");
}

// ---- builders ---------------------------------------------------------------

namespace {

Rational shoelace2(const std::vector<Point2>& v) {
    Rational s(0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& p = v[k];
        const auto& q = v[(k + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

}  // namespace

Polypol polygon(const std::vector<Point2>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("polygon: empty vertex list");
    if (vertices.size() < 3) throw std::invalid_argument("polygon: need at least 3 vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                throw std::invalid_argument("polygon: repeated vertex " + point_string(vertices[i]));
    Rational a2 = shoelace2(vertices);
    if (a2.sign() < 0) throw std::invalid_argument("polygon: vertices are in clockwise order");
    if (a2.is_zero()) throw std::invalid_argument("polygon: zero area");
    std::vector<RationalArc> arcs;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        arcs.push_back(RationalArc::segment(vertices[k], vertices[(k + 1) % vertices.size()]));
    return Polypol(std::move(arcs), Tier::exact, "polygon");
}

Polypol rectangle(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("rectangle: a and b must be positive");
    Polypol p = polygon({{Rational(0), Rational(0)}, {a, Rational(0)}, {a, b}, {Rational(0), b}});
    return Polypol(p.arcs(), Tier::exact, "rectangle:" + a.to_string() + "," + b.to_string());
}

Polypol standard_triangle() {
    Polypol p = polygon({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    return Polypol(p.arcs(), Tier::exact, "triangle");
}

Polypol square() {
    Polypol p = polygon({{Rational(-1), Rational(-1)}, {Rational(1), Rational(-1)}, {Rational(1), Rational(1)},
                         {Rational(-1), Rational(1)}});
    return Polypol(p.arcs(), Tier::exact, "square");
}

Polypol hexagon() {
    Polypol p = polygon({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)},
                         {Rational(-1), Rational(0)}, {Rational(-1), Rational(-1)}, {Rational(0), Rational(-1)}});
    return Polypol(p.arcs(), Tier::exact, "hexagon");
}

RationalArc circle_arc(int quadrant, const Rational& t0, const Rational& t1, bool smooth_end) {
    QPoly1 den{Rational(1), Rational(0), Rational(1)};
    RatFunc1 c(QPoly1{Rational(1), Rational(0), Rational(-1)}, den);
    RatFunc1 s(QPoly1{Rational(0), Rational(2)}, den);
    RatFunc1 mc(QPoly1{Rational(-1), Rational(0), Rational(1)}, den);
    RatFunc1 ms(QPoly1{Rational(0), Rational(-2)}, den);
    switch (((quadrant % 4) + 4) % 4) {
        case 0: return RationalArc(c, s, t0, t1, smooth_end);
        case 1: return RationalArc(ms, c, t0, t1, smooth_end);
        case 2: return RationalArc(mc, ms, t0, t1, smooth_end);
        default: return RationalArc(s, mc, t0, t1, smooth_end);
    }
}

Polypol unit_disk() {
    std::vector<RationalArc> arcs;
    for (int k = 0; k < 4; ++k) arcs.push_back(circle_arc(k, Rational(0), Rational(1), true));
    return Polypol(std::move(arcs), Tier::exact, "disk");
}

Polypol upper_half_disk() {
    std::vector<RationalArc> arcs;
    arcs.push_back(RationalArc::segment({Rational(-1), Rational(0)}, {Rational(1), Rational(0)}));
    arcs.push_back(circle_arc(0, Rational(0), Rational(1), true));
    arcs.push_back(circle_arc(1, Rational(0), Rational(1), false));
    return Polypol(std::move(arcs), Tier::exact, "half-disk");
}

Polypol sector_tau(const Rational& tau0, const std::optional<Rational>& tau1) {
    if (tau0.sign() < 0) throw std::invalid_argument("sector: need phi0 >= 0");
    if (tau1 && !(tau0 < *tau1)) throw std::invalid_argument("sector: need phi0 < phi1");
    const Point2 origin{Rational(0), Rational(0)};
    std::vector<RationalArc> pieces;
    const Rational one(1);
    if (tau0 < one) {
        bool continues = !tau1 || *tau1 > one;
        Rational end = continues ? one : *tau1;
        pieces.push_back(circle_arc(0, tau0, end, continues));
    }
    if (!tau1 || *tau1 > one) {
        Rational s0 = tau0 >= one ? (tau0 - one) / (tau0 + one) : Rational(0);
        Rational s1 = tau1 ? (*tau1 - one) / (*tau1 + one) : one;
        pieces.push_back(circle_arc(1, s0, s1, false));
    }
    Point2 p0 = pieces.front().start(), p1 = pieces.back().end();
    std::vector<RationalArc> arcs;
    arcs.push_back(RationalArc::segment(origin, p0));
    for (auto& a : pieces) arcs.push_back(std::move(a));
    arcs.push_back(RationalArc::segment(p1, origin));
    // a straight angle at the origin is not a corner
    bool straight = p0.x * p1.y - p0.y * p1.x == Rational(0);
    arcs.back().set_smooth_joint_end(straight);
    std::string name = "sector-tau:" + tau0.to_string() + "," + (tau1 ? tau1->to_string() : std::string("inf"));
    return Polypol(std::move(arcs), Tier::exact, name);
}

Polypol sector(double phi0, double phi1) {
    const double pi = std::numbers::pi;
    if (!(phi0 >= 0.0 && phi0 < phi1 && phi1 <= pi + 1e-15))
        throw std::invalid_argument("sector: need 0 <= phi0 < phi1 <= pi");
    Rational t0 = Rational::from_double(std::tan(phi0 / 2));
    std::optional<Rational> t1;
    if (std::abs(phi1 - pi) > 1e-15) t1 = Rational::from_double(std::tan(phi1 / 2));
    Polypol p = sector_tau(t0, t1);
    return Polypol(p.arcs(), Tier::float_tier, "sector:" + format_double(phi0) + "," + format_double(phi1));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

Polypol builder_by_name(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    auto argv = split(args, ',');
    if (head == "triangle") return standard_triangle();
    if (head == "square") return square();
    if (head == "disk") return unit_disk();
    if (head == "half-disk") return upper_half_disk();
    if (head == "hexagon") return hexagon();
    if (head == "rectangle") {
        if (argv.size() != 2) throw std::invalid_argument("rectangle needs rectangle:a,b");
        return rectangle(Rational::parse(argv[0]), Rational::parse(argv[1]));
    }
    if (head == "sector") {
        if (argv.size() != 2) throw std::invalid_argument("sector needs sector:phi0,phi1 (radians)");
        return sector(std::stod(argv[0]), std::stod(argv[1]));
    }
    if (head == "sector-tau") {
        if (argv.size() != 2) throw std::invalid_argument("sector-tau needs sector-tau:tau0,tau1 (tau1 may be inf)");
        std::optional<Rational> t1;
        if (argv[1] != "inf") t1 = Rational::parse(argv[1]);
        return sector_tau(Rational::parse(argv[0]), t1);
    }
    if (head == "polygon") {
        std::vector<Point2> pts;
        for (const auto& pair : split(args, ';')) {
            auto xy = split(pair, ',');
            if (xy.size() != 2) throw std::invalid_argument("polygon needs polygon:x1,y1;x2,y2;...");
            pts.push_back({Rational::parse(xy[0]), Rational::parse(xy[1])});
        }
        return polygon(pts);
    }
    throw std::invalid_argument("unknown shape '" + spec + "'");
}

// ---- JSON -------------------------------------------------------------------

namespace {

RatFunc1 ratfunc_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_object() || !j.contains("num")) throw std::invalid_argument(std::string("arc field '") + what + "' needs num");
    QPoly1 num = poly1_from_json(j.at("num"));
    QPoly1 den = j.contains("den") ? poly1_from_json(j.at("den")) : QPoly1::constant(1);
    return RatFunc1(num, den);
}

}  // namespace

Polypol from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("arcs") || !doc.at("arcs").is_array())
        throw std::invalid_argument("region JSON must be an object with an 'arcs' array");
    std::vector<RationalArc> arcs;
    for (const auto& a : doc.at("arcs")) {
        if (!a.contains("x") || !a.contains("y") || !a.contains("interval"))
            throw std::invalid_argument("each arc needs x, y and interval");
        const auto& iv = a.at("interval");
        if (!iv.is_array() || iv.size() != 2) throw std::invalid_argument("interval must be [a, b]");
        bool smooth = a.value("smooth_joint_end", false);
        arcs.emplace_back(ratfunc_from_json(a.at("x"), "x"), ratfunc_from_json(a.at("y"), "y"),
                          rational_from_json(iv[0]), rational_from_json(iv[1]), smooth);
    }
    if (arcs.empty()) throw std::invalid_argument("region has no arcs");
    Tier tier = Tier::exact;
    if (doc.contains("tier")) {
        std::string t = doc.at("tier").get<std::string>();
        if (t == "float") tier = Tier::float_tier;
        else if (t != "exact") throw std::invalid_argument("tier must be 'exact' or 'float'");
    }
    return Polypol(std::move(arcs), tier, doc.value("name", std::string("region")));
}

nlohmann::json to_json(const Polypol& p) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : p.arcs()) {
        arcs.push_back({{"x", {{"num", poly1_to_json(a.x().num())}, {"den", poly1_to_json(a.x().den())}}},
                        {"y", {{"num", poly1_to_json(a.y().num())}, {"den", poly1_to_json(a.y().den())}}},
                        {"interval", {a.a().to_string(), a.b().to_string()}},
                        {"smooth_joint_end", a.smooth_joint_end()}});
    }
    nlohmann::json out{{"arcs", arcs}, {"tier", p.tier() == Tier::exact ? "exact" : "float"}};
    if (!p.name().empty()) out["name"] = p.name();
    return out;
}

// ---- validation -------------------------------------------------------------

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"ok", ok()}, {"checks", arr}};
}

namespace {

using P = std::pair<double, double>;

double cross(P o, P a, P b) { return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first); }

double point_segment_distance(P p, P a, P b) {
    double dx = b.first - a.first, dy = b.second - a.second;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.first - a.first) * dx + (p.second - a.second) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.first - a.first - t * dx, p.second - a.second - t * dy);
}

bool segments_meet(P a, P b, P c, P d, double tol) {
    double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d), point_segment_distance(c, a, b),
                     point_segment_distance(d, a, b)}) < tol;
}

std::vector<P> sample_polyline(const RationalArc& arc, int n) {
    std::vector<P> pts;
    double a = arc.a().to_double(), b = arc.b().to_double();
    for (int k = 0; k <= n; ++k) {
        double x, y, xp, yp;
        arc.eval(a + (b - a) * k / n, x, y, xp, yp);
        pts.emplace_back(x, y);
    }
    pts.front() = arc.start().to_double();
    pts.back() = arc.end().to_double();
    return pts;
}

// Does the arc pass through the exact point p?
bool arc_contains(const RationalArc& arc, const Point2& p) {
    QPoly1 fx = arc.x().num() - arc.x().den() * p.x;
    QPoly1 fy = arc.y().num() - arc.y().den() * p.y;
    QPoly1 g;
    if (fx.is_zero()) g = fy;
    else if (fy.is_zero()) g = fx;
    else g = gcd(fx, fy);
    if (g.is_zero()) return true;
    if (g.degree() <= 0) return false;
    return count_real_roots(g, arc.a(), arc.b()) > 0;
}

}  // namespace

ValidationReport validate(const Polypol& p, int samples_per_arc) {
    ValidationReport rep;
    const auto& arcs = p.arcs();
    const std::size_t n = arcs.size();
    rep.checks.push_back({"nonempty", n > 0, n > 0 ? std::to_string(n) + " arcs" : "no arcs"});
    if (n == 0) return rep;

    {
        ValidationCheck c{"closure", true, ""};
        for (std::size_t k = 0; k < n; ++k) {
            Point2 e = arcs[k].end(), s = arcs[(k + 1) % n].start();
            bool same = p.tier() == Tier::exact
                            ? e == s
                            : std::hypot(e.x.to_double() - s.x.to_double(), e.y.to_double() - s.y.to_double()) <= 1e-12;
            if (!same) {
                c.passed = false;
                c.detail += "gap between arc " + std::to_string(k) + " end " + point_string(e) + " and arc " +
                            std::to_string((k + 1) % n) + " start " + point_string(s) + "; ";
            }
        }
        rep.checks.push_back(c);
    }
    {
        ValidationCheck c{"denominators", true, ""};
        for (std::size_t k = 0; k < n; ++k) {
            for (const RatFunc1* f : {&arcs[k].x(), &arcs[k].y()}) {
                if (f->den().degree() > 0 && count_real_roots(f->den(), arcs[k].a(), arcs[k].b()) > 0) {
                    c.passed = false;
                    c.detail += "arc " + std::to_string(k) + " has a denominator root on its interval; ";
                }
            }
        }
        rep.checks.push_back(c);
    }
    {
        ValidationCheck c{"regular_parametrization", true, ""};
        for (std::size_t k = 0; k < n; ++k) {
            QPoly1 gx = velocity_numerator(arcs[k].x()), gy = velocity_numerator(arcs[k].y());
            if (gx.is_zero() && gy.is_zero()) {
                c.passed = false;
                c.detail += "arc " + std::to_string(k) + " is constant; ";
                continue;
            }
            QPoly1 g = gx.is_zero() ? gy : (gy.is_zero() ? gx : gcd(gx, gy));
            if (g.degree() > 0) {
                for (const auto& r : real_roots(g, arcs[k].a(), arcs[k].b()))
                    c.detail += "arc " + std::to_string(k) + " flagged stationary point tau=" + format_double(r.value) + "; ";
            }
        }
        rep.checks.push_back(c);
    }
    {
        Number area = signed_area(p);
        ValidationCheck c{"orientation", area.value > 0, "signed area = " + area.to_string()};
        rep.checks.push_back(c);
    }
    {
        ValidationCheck c{"self_intersection", true, ""};
        std::vector<std::vector<P>> lines;
        for (const auto& a : arcs) lines.push_back(sample_polyline(a, a.is_segment() ? 1 : samples_per_arc));
        const double tol = 1e-9;
        for (std::size_t i = 0; i < n && c.passed; ++i) {
            for (std::size_t j = i + 1; j < n && c.passed; ++j) {
                bool i_end_j_start = j == i + 1;         // vertex i joins arc i to arc j
                bool j_end_i_start = (j + 1) % n == i;   // vertex j joins arc j to arc i
                const auto& L = lines[i];
                const auto& M = lines[j];
                for (std::size_t s = 0; s + 1 < L.size() && c.passed; ++s) {
                    for (std::size_t t = 0; t + 1 < M.size(); ++t) {
                        if (i_end_j_start && s + 2 == L.size() && t == 0) continue;
                        if (j_end_i_start && s == 0 && t + 2 == M.size()) continue;
                        if (segments_meet(L[s], L[s + 1], M[t], M[t + 1], tol)) {
                            c.passed = false;
                            c.detail = "arcs " + std::to_string(i) + " and " + std::to_string(j) + " meet away from a shared vertex";
                            break;
                        }
                    }
                }
            }
        }
        rep.checks.push_back(c);
    }
    {
        ValidationCheck c{"distinct_boundary", true, ""};
        std::vector<std::optional<QPoly2>> eqs;
        for (std::size_t k = 0; k < n; ++k) {
            try {
                eqs.emplace_back(implicitize(arcs[k]));
            } catch (const std::exception& e) {
                eqs.emplace_back(std::nullopt);
                c.passed = false;
                c.detail += "arc " + std::to_string(k) + ": " + e.what() + "; ";
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!eqs[i] || !eqs[j] || gcd(*eqs[i], *eqs[j]).is_constant()) continue;
                // same component: the arcs may only meet at endpoints
                bool overlap = false;
                for (int s = 1; s <= 7 && !overlap; ++s) {
                    Rational t = arcs[i].a() + (arcs[i].b() - arcs[i].a()) * Rational(s, 8);
                    overlap = arc_contains(arcs[j], arcs[i].at(t));
                }
                if (overlap) {
                    c.passed = false;
                    c.detail += "arcs " + std::to_string(i) + " and " + std::to_string(j) + " overlap on " +
                                to_string(*eqs[i]) + " = 0; ";
                }
            }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

Number signed_area(const Polypol& p, const QuadratureOptions& opts) {
    Rational exact(0);
    double numeric = 0.0;
    bool all_exact = true;
    for (const auto& arc : p.arcs()) {
        if (arc.is_polynomial()) {
            const QPoly1& x = arc.x().num();
            const QPoly1& y = arc.y().num();
            QPoly1 w = (x * y.derivative() - y * x.derivative()) * Rational(1, 2);
            exact += integrate(w, arc.a(), arc.b());
        } else {
            all_exact = false;
            numeric += integrate_adaptive(
                [&](double t) {
                    double x, y, xp, yp;
                    arc.eval(t, x, y, xp, yp);
                    return 0.5 * (x * yp - y * xp);
                },
                arc.a().to_double(), arc.b().to_double(), opts);
        }
    }
    if (all_exact) return Number(exact);
    return Number(exact.to_double() + numeric);
}

// ---- implicitization --------------------------------------------------------

namespace {

QPoly1 as_univariate_x(const QPoly2& p) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_x(), 0)) + 1);
    for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m.i)] = v;
    return QPoly1(std::move(c));
}

QPoly1 as_univariate_y(const QPoly2& p) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_y(), 0)) + 1);
    for (const auto& [m, v] : p.terms()) c[static_cast<std::size_t>(m.j)] = v;
    return QPoly1(std::move(c));
}

// Rational linear factors split off, the rest kept as one piece.
void split_univariate(const QPoly1& u, bool in_x, std::vector<QPoly2>& out) {
    if (u.degree() <= 0) return;
    QPoly1 rest = u;
    for (const auto& [r, mult] : rational_roots(u)) {
        QPoly1 lin{-r, Rational(1)};
        for (int k = 0; k < mult; ++k) rest = exact_quotient(rest, lin);
        out.push_back(in_x ? from_univariate_x(lin) : from_univariate_y(lin));
    }
    if (rest.degree() > 0) out.push_back(in_x ? from_univariate_x(rest) : from_univariate_y(rest));
}

}  // namespace

QPoly2 implicitize(const RationalArc& arc) {
    if (velocity_numerator(arc.x()).is_zero() && velocity_numerator(arc.y()).is_zero())
        throw std::invalid_argument("implicitize: degenerate (constant) arc");
    auto clear = [](const RatFunc1& f, const QPoly2& var) {
        const int d = std::max(f.num().degree(), f.den().degree());
        std::vector<QPoly2> c;
        for (int k = 0; k <= d; ++k) c.push_back(var * f.den().coeff(k) - QPoly2(f.num().coeff(k)));
        return TauPoly(std::move(c));
    };
    QPoly2 res = resultant_in_tau(clear(arc.x(), QPoly2::x()), clear(arc.y(), QPoly2::y()));
    if (res.is_zero()) throw std::runtime_error("implicitize: resultant vanished identically");
    QPoly2 sq = squarefree_part(res);
    auto [cx, r1] = split_content_in_x(sq);
    auto [cy, r2] = split_content_in_y(r1);
    std::vector<QPoly2> pieces;
    split_univariate(as_univariate_x(cx), true, pieces);
    split_univariate(as_univariate_y(cy), false, pieces);
    if (!r2.is_constant()) pieces.push_back(r2);
    std::vector<Point2> samples;
    for (int s = 1; s <= 5; ++s) samples.push_back(arc.at(arc.a() + (arc.b() - arc.a()) * Rational(s, 6)));
    QPoly2 out(Rational(1));
    bool any = false;
    for (const auto& f : pieces) {
        bool vanishes = true;
        for (const auto& pt : samples)
            if (!f(pt.x, pt.y).is_zero()) vanishes = false;
        if (vanishes) {
            out *= f;
            any = true;
        }
    }
    if (!any) throw std::logic_error("implicitize: no resultant factor vanishes on the arc");
    return normalize_sign_content(out);
}

}  // namespace polypol
