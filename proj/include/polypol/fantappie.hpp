#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

#include "polypol/moments.hpp"

namespace polypol {

struct DualPoint {
    double u = 0.0;
    double v = 0.0;
};

enum class TransformMethod { boundary_dy, boundary_dx, boundary_radial, closed_form, series };
const char* to_string(TransformMethod m);

struct TransformValue {
    double value = 0.0;
    TransformMethod method = TransformMethod::boundary_dy;
    double error_estimate = 0.0;
    nlohmann::json to_json() const;
};

/// The kernel line 1 − ux − vy meets the boundary (within the root margin).
class KernelOnBoundary : public std::runtime_error {
public:
    KernelOnBoundary(const std::string& what, int arc, double tau) : std::runtime_error(what), arc_(arc), tau_(tau) {}
    int arc() const { return arc_; }
    double tau() const { return tau_; }

private:
    int arc_;
    double tau_;
};

struct TransformOptions {
    QuadratureOptions quad;
    /// below this |u| (resp. |v|) the 1/u (resp. 1/v) form is not used
    double crossover = 1e-8;
    /// parameter-space margin around each arc interval for the kernel check
    double root_margin = 1e-9;
};

/// F(u,v) = 2∬ dxdy/(1−ux−vy)³ by boundary reduction. Uses the dy form when
/// |u| ≥ |v|, the dx form otherwise; when both exceed the crossover both are
/// computed and their gap enters the error estimate. Near the origin the
/// radial form ∮(x dy − y dx)/Q² is used. Throws KernelOnBoundary.
TransformValue transform_eval(const Polypol& p, DualPoint w, const TransformOptions& opts = {});

/// One boundary representation, no kernel check.
double transform_boundary(const Polypol& p, DualPoint w, TransformMethod method, const TransformOptions& opts = {});

/// Analytic continuation to complex (u, v) by the radial boundary form.
std::complex<double> transform_eval_complex(const Polypol& p, std::complex<double> u, std::complex<double> v,
                                            const TransformOptions& opts = {});

/// Throws KernelOnBoundary if 1 − ux − vy vanishes on an arc (exact Sturm count).
void check_kernel(const Polypol& p, std::complex<double> u, std::complex<double> v, double margin = 1e-9);

SeriesExpansion transform_series(const Polypol& p, int order, const QuadratureOptions& opts = {});

// ---- closed forms (principal branch); throw std::domain_error off-domain ----

double closed_form_disk(DualPoint w);
double closed_form_half_disk(DualPoint w);
/// 𝒜((1+u)τ1 − v) − 𝒜((1+u)τ0 − v); τ1 = nullopt stands for φ1 = π.
double closed_form_sector(double tau0, std::optional<double> tau1, DualPoint w);
double closed_form_sector_angles(double phi0, double phi1, DualPoint w);
double closed_form_triangle(DualPoint w);
/// Continuous extension ab(2−au−bv)/((1−au)(1−bv)(1−au−bv)) of the boxed formula.
double closed_form_rectangle(double a, double b, DualPoint w);

/// Exact F_P for polygons: Σ_edges (Q_y − P_y)/(u ℓ_P ℓ_Q), ℓ_V = 1 − x_V u − y_V v.
RatFunc2 polygon_transform_exact(const Polypol& p);

/// ∏_V (1 − x_V u − y_V v) over polygon corners.
QPoly2 vertex_line_product(const Polypol& p);

struct PolarDualityResult {
    RatFunc2 transform;
    QPoly2 adjoint;
    int degree = 0;
    int vertex_count = 0;
    bool degree_ok = false;
    nlohmann::json to_json() const;
};

/// F_P·∏_V ℓ_V as an exact polynomial. Requires the origin strictly inside p.
PolarDualityResult polar_duality_check(const Polypol& p);

/// Exact point-in-polygon test: +1 inside, 0 on the boundary, −1 outside.
int locate_point(const Polypol& polygon, const Point2& q);

}  // namespace polypol
