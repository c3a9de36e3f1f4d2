#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>

#include "polypol/algebra.hpp"
#include "polypol/polypol.hpp"

namespace polypol {

/// Reduced boundary components and the component carrying each arc.
struct BoundaryEquation {
    std::vector<QPoly2> factors;
    std::vector<int> arc_factor;
    int degree() const;
    QPoly2 product() const;
};

BoundaryEquation boundary_components(const Polypol& p);

/// Distinct implicit equations of the arcs.
std::vector<QPoly2> boundary_equation(const Polypol& p);

using ProjPoint = std::array<std::complex<double>, 3>;
using ExactProjPoint = std::array<Rational, 3>;

struct ResidualPoint {
    ProjPoint point;
    std::optional<ExactProjPoint> exact;  ///< set for rational points
    std::pair<int, int> source;
    int multiplicity = 1;
    nlohmann::json to_json() const;
};

/// Intersection count of one factor pair.
struct BezoutCount {
    int first = 0;
    int second = 0;
    int expected = 0;         ///< deg·deg
    int at_vertices = 0;      ///< multiplicity absorbed by polypol vertices
    int residual = 0;         ///< multiplicity of residual points
    bool balanced() const { return at_vertices + residual == expected; }
};

struct ResidualAnalysis {
    std::vector<ResidualPoint> points;
    std::vector<BezoutCount> counts;
    bool balanced() const;
    nlohmann::json to_json() const;
};

/// Pairwise projective intersections of the factors minus the genuine vertices.
/// Throws std::invalid_argument for factors sharing a component.
ResidualAnalysis residual_points(const std::vector<QPoly2>& factors, const std::vector<Vertex>& vertices);

class NonUniqueAdjoint : public std::runtime_error {
public:
    explicit NonUniqueAdjoint(int dim)
        : std::runtime_error("adjoint interpolation space has dimension " + std::to_string(dim) + ", expected 1"),
          dim_(dim) {}
    int dimension() const { return dim_; }

private:
    int dim_;
};

class NonNormalCrossing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Adjoint {
    QPoly2 numerator;      ///< dehomogenized, first graded coefficient 1
    int degree = 0;        ///< d − 3
    bool exact = true;     ///< false when complex residual points forced a float solve
    double residual = 0.0; ///< max |A| over residual points (normalized)
    ResidualAnalysis points;
};

Adjoint adjoint_curve(const Polypol& p);
QPoly2 adjoint(const Polypol& p);

/// κ · A / ∏ factors  dx∧dy
struct MeromorphicForm2 {
    Number kappa;
    QPoly2 numerator;
    std::vector<QPoly2> denominator_factors;
    std::vector<int> arc_factor;
    bool exact = true;
    nlohmann::json to_json() const;
};

MeromorphicForm2 canonical_form(const Polypol& p);

/// κ A(p) / (J(p) R(p)) with the incoming branch first.
Number iterated_residue(const MeromorphicForm2& form, const Vertex& vertex);

/// (2πi)^{-2} ∮∮ Ω over |f| = |g| = radius around the vertex, trapezoid rule.
std::complex<double> iterated_residue_contour(const MeromorphicForm2& form, const Vertex& vertex,
                                              double radius = 1e-3, int nodes = 256);

}  // namespace polypol
