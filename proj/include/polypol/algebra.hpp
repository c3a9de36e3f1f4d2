#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "json.hpp"

#include "polypol/ratfunc.hpp"

namespace polypol {

/// Polynomial in τ whose coefficients are polynomials in two other variables.
using TauPoly = Poly1<QPoly2>;

/// Sylvester resultant in τ, computed with fraction-free (Bareiss)
/// elimination. Throws std::invalid_argument if both inputs have τ-degree 0.
QPoly2 resultant_in_tau(const TauPoly& p, const TauPoly& q);

/// Resultant of two univariate polynomials over Q (same Bareiss kernel).
Rational resultant(const QPoly1& p, const QPoly1& q);

/// Determinant of a square matrix of Q[x,y] entries via Bareiss elimination.
QPoly2 bareiss_determinant(std::vector<std::vector<QPoly2>> m);

struct RealRoot {
    double value = 0.0;
    int multiplicity = 1;
    Rational lo;                    ///< isolating bracket
    Rational hi;
    std::optional<Rational> exact;  ///< set when the root was hit exactly
};

/// Real roots of p in [lo, hi] with multiplicities, by square-free
/// decomposition, Sturm isolation and exact bisection to width `tol`.
std::vector<RealRoot> real_roots(const QPoly1& p, const Rational& lo, const Rational& hi, double tol = 1e-12);

/// Binary64 coefficients are converted exactly before isolation.
std::vector<RealRoot> real_roots(const Poly1<double>& p, double lo, double hi, double tol = 1e-12);

/// Number of distinct real roots of p in the closed interval [lo, hi].
int count_real_roots(const QPoly1& p, const Rational& lo, const Rational& hi);

/// Sturm chain of a nonzero polynomial.
std::vector<QPoly1> sturm_sequence(const QPoly1& p);

/// Rational roots of p (exact), each with its multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(const QPoly1& p);

/// All complex roots (Aberth–Ehrlich iteration with Newton polishing).
std::vector<std::complex<double>> complex_roots(const Poly1<std::complex<double>>& p);
std::vector<std::complex<double>> complex_roots(const QPoly1& p);

// ---- serialization ----------------------------------------------------------

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json number_to_json(const Number& n);

/// [[i, j, "p/q"], …] in graded order.
nlohmann::json poly2_to_json(const QPoly2& p);
QPoly2 poly2_from_json(const nlohmann::json& j);

/// Coefficient array of "p/q" strings, lowest degree first.
nlohmann::json poly1_to_json(const QPoly1& p);
QPoly1 poly1_from_json(const nlohmann::json& j);

nlohmann::json ratfunc2_to_json(const RatFunc2& f);

}  // namespace polypol
