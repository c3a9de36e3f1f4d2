#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "polypol/algebra.hpp"
#include "polypol/quadrature.hpp"

namespace polypol {

struct Point2 {
    Rational x;
    Rational y;
    friend bool operator==(const Point2&, const Point2&) = default;
    std::pair<double, double> to_double() const { return {x.to_double(), y.to_double()}; }
};

/// Oriented arc τ ↦ (x(τ), y(τ)), τ ∈ [a, b]. Coefficients are always exact;
/// binary64 copies are cached for quadrature.
class RationalArc {
public:
    RationalArc(RatFunc1 x, RatFunc1 y, Rational a, Rational b, bool smooth_joint_end = false);

    /// Straight segment P → Q, parametrized on [0, 1].
    static RationalArc segment(const Point2& p, const Point2& q);

    const RatFunc1& x() const { return x_; }
    const RatFunc1& y() const { return y_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool smooth_joint_end() const { return smooth_; }
    void set_smooth_joint_end(bool s) { smooth_ = s; }

    Point2 at(const Rational& t) const { return {x_(t), y_(t)}; }
    Point2 start() const { return at(a_); }
    Point2 end() const { return at(b_); }

    bool is_polynomial() const { return x_.is_polynomial() && y_.is_polynomial(); }
    bool is_segment() const {
        return is_polynomial() && x_.num().degree() <= 1 && y_.num().degree() <= 1;
    }

    /// Same image traversed backwards (τ ↦ a + b − τ).
    RationalArc reversed() const;

    /// Position and velocity at parameter t.
    void eval(double t, double& x, double& y, double& xp, double& yp) const;
    void eval(std::complex<double> t, std::complex<double>& x, std::complex<double>& y, std::complex<double>& xp,
              std::complex<double>& yp) const;

private:
    RatFunc1 x_, y_;
    Rational a_, b_;
    bool smooth_ = false;
    Poly1<double> nx_, dx_, ny_, dy_, nxp_, dxp_, nyp_, dyp_;
};

enum class Tier { exact, float_tier };

struct Vertex {
    Point2 point;
    int incoming = 0;  ///< arc arriving at the vertex
    int outgoing = 0;  ///< arc leaving the vertex
    bool smooth_joint = false;
};

/// Closed chain of rational arcs. Vertex k sits at the end of arc k.
class Polypol {
public:
    Polypol() = default;
    Polypol(std::vector<RationalArc> arcs, Tier tier = Tier::exact, std::string name = {})
        : arcs_(std::move(arcs)), tier_(tier), name_(std::move(name)) {}

    const std::vector<RationalArc>& arcs() const { return arcs_; }
    Tier tier() const { return tier_; }
    const std::string& name() const { return name_; }
    std::vector<Vertex> vertices() const;
    std::vector<Vertex> genuine_vertices() const;

    bool is_polygon() const;
    /// Polygon corners in chain order (start point of each arc).
    std::vector<Point2> polygon_vertices() const;

    /// All arcs and their order reversed.
    Polypol reversed() const;

private:
    std::vector<RationalArc> arcs_;
    Tier tier_ = Tier::exact;
    std::string name_;
};

// ---- builders ---------------------------------------------------------------

/// Throws std::invalid_argument on empty, repeated or clockwise input.
Polypol polygon(const std::vector<Point2>& vertices);
Polypol rectangle(const Rational& a, const Rational& b);
Polypol standard_triangle();
/// [−1, 1]²
Polypol square();
/// Affine-regular hexagon (1,0),(1,1),(0,1),(−1,0),(−1,−1),(0,−1).
Polypol hexagon();
Polypol unit_disk();
Polypol upper_half_disk();
/// Sector between angles 2·atan(τ0) and 2·atan(τ1); τ1 = nullopt means φ1 = π.
Polypol sector_tau(const Rational& tau0, const std::optional<Rational>& tau1);
/// Float-tier convenience: τ = tan(φ/2) converted exactly from binary64.
Polypol sector(double phi0, double phi1);

/// Unit-circle arc of quadrant k (rotation by kπ/2 of the base arc
/// ((1−τ²)/(1+τ²), 2τ/(1+τ²))), restricted to [t0, t1] ⊂ [0, 1].
RationalArc circle_arc(int quadrant, const Rational& t0, const Rational& t1, bool smooth_end);

/// Builder by name: triangle, square, disk, half-disk, hexagon,
/// rectangle:a,b, sector:phi0,phi1.
Polypol builder_by_name(const std::string& spec);

Polypol from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Polypol& p);

// ---- analysis ---------------------------------------------------------------

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const;
    const ValidationCheck* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

ValidationReport validate(const Polypol& p, int samples_per_arc = 256);

/// (1/2)∮(x dy − y dx); exact when every arc is polynomial.
Number signed_area(const Polypol& p, const QuadratureOptions& opts = {});

/// Squarefree implicit equation of the Zariski closure of the arc, normalized
/// to integer coefficients with positive first graded term.
QPoly2 implicitize(const RationalArc& arc);

}  // namespace polypol
