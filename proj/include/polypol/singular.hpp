#pragma once

#include <string>

#include "polypol/fantappie.hpp"

namespace polypol {

/// Polynomials here are in the dual coordinates (u, v), stored in the x, y slots.
struct VertexLine {
    Point2 vertex;
    QPoly2 line;                  ///< 1 − x_V u − y_V v
    bool never_singular = false;  ///< vertex at the origin: the line is the constant 1
};

struct SingularSupport {
    std::vector<VertexLine> vertex_lines;
    std::vector<QPoly2> dual_curves;
    std::vector<int> dual_curve_arc;  ///< representative arc of each dual curve

    /// Components that can actually vanish: vertex lines (minus never_singular) then dual curves.
    std::vector<QPoly2> components() const;
    nlohmann::json to_json() const;
};

/// Dual curve of one arc: Res_τ(G, ∂_τG)/lc_τ(G) with G = L·(1 − u x(τ) − v y(τ)),
/// squarefree, linear pieces removed, and factors failing the tangency test dropped.
std::vector<QPoly2> dual_curve(const RationalArc& arc);

/// Tangency check at `samples` complex points of the factor's zero set.
bool tangency_test(const QPoly2& factor, const RationalArc& arc, int samples = 10, double tol = 1e-8);

SingularSupport singular_support(const Polypol& p);

struct SupportDistance {
    double distance = 0.0;
    int component = -1;  ///< index into SingularSupport::components(), −1 if empty
};

/// Distance from (u, v) to the support: Newton projection onto each component.
SupportDistance support_distance(const SingularSupport& s, double u, double v);

enum class ExponentClass { pole_integer, half_integral, logarithmic, regular, unclassified };
const char* to_string(ExponentClass c);

struct ExponentEstimate {
    std::string component;
    DualPoint base;
    DualPoint direction;
    double exponent = 0.0;
    double residual = 0.0;      ///< RMS of the power-law fit in log space
    double log_slope = 0.0;     ///< slope of log|F| against log log(1/ε)
    double log_residual = 0.0;
    ExponentClass classification = ExponentClass::unclassified;
    std::vector<std::pair<double, double>> samples;  ///< (ε, F)
    nlohmann::json to_json() const;
};

class ProbeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProbeOptions {
    /// Near the support 1 − ux − vy loses about log10(1/ε) digits, so the
    /// quadrature tolerance is relaxed; the fit needs far less accuracy.
    ProbeOptions() { transform.quad.rel_tol = 1e-9; }
    TransformOptions transform;
    double eps0 = 1e-2;
    int steps = 13;
};

/// Projects `base` onto the component, then fits log|F| ~ e log ε along base + ε·dir/|dir|.
ExponentEstimate probe_exponent(const Polypol& p, const QPoly2& component, DualPoint base, DualPoint direction,
                                const ProbeOptions& opts = {});

struct ScanOptions {
    TransformOptions transform;
    double blowup = 1e6;
    double disagreement = 1e-4;
    double proximity = 1e-3;
};

struct ScanPoint {
    double u = 0.0, v = 0.0;
    double absF = 0.0;
    std::string status;  ///< ok, blowup, disagreement, quadrature, refused
    bool flagged = false;
    SupportDistance nearest;
};

struct ScanReport {
    int resolution = 0;
    double lo = -2.0, hi = 2.0;
    std::vector<ScanPoint> points;
    int flagged = 0;
    int refused = 0;
    int flagged_outside = 0;  ///< flagged points farther than the proximity tolerance
    /// refused points next to an evaluated one, and how many of them lie within a grid step of the support
    int frontier = 0;
    int frontier_near_support = 0;
    bool containment() const { return flagged_outside == 0; }
    std::string to_csv() const;
    nlohmann::json summary() const;
};

/// Numeric evidence only: grid evaluation of F and a containment check of flagged points.
ScanReport conjecture_scan(const Polypol& p, int resolution, double lo = -2.0, double hi = 2.0,
                           const ScanOptions& opts = {});

}  // namespace polypol
