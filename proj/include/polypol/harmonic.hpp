#pragma once

#include <complex>
#include <optional>

#include "polypol/fantappie.hpp"

namespace polypol {

/// Complex value, exact over Q(i) when available.
struct CNumber {
    std::complex<double> value;
    std::optional<GaussRational> exact;

    CNumber() = default;
    CNumber(std::complex<double> v) : value(v) {}
    CNumber(const GaussRational& g) : value(g.to_complex()), exact(g) {}
    nlohmann::json to_json() const;
};

/// μ_j = ∫ z^j dx dy (real area measure; the dz∧dz̄ convention is −2i times this),
/// S_j = μ_j and G_j = (j+1) μ_j.
struct HarmonicSeries {
    int order = 0;
    std::vector<CNumber> mu;
    std::vector<CNumber> S;
    std::vector<CNumber> G;
    bool exact() const;
    nlohmann::json to_json() const;
};

/// μ_j = (1/(j+1)) ∮ z^{j+1} dy, arc by arc; exact for polynomial arcs.
HarmonicSeries harmonic_moments(const Polypol& p, int order, const QuadratureOptions& opts = {});

/// Coefficients of S(t) = −(i/2) ∮ z̄ dz/(1 − tz), i.e. −(i/2) ∮ z̄ z^j dz.
std::vector<CNumber> harmonic_moments_zbar(const Polypol& p, int order, const QuadratureOptions& opts = {});

/// μ_j = Σ_k C(j,k) i^k m_{j−k,k} from a moment table.
std::vector<CNumber> harmonic_from_moments(const MomentTable& table);

/// G(t) = ∫ dx dy/(1 − tz)² = (i/2) ∮ z dz̄/(1 − tz); equal to the (i/(2t)) ∮ dz̄/(1 − tz)
/// form because ∮ dz̄ = 0, and finite at t = 0 where it returns μ_0.
/// Throws KernelOnBoundary when 1/t lies on the boundary.
std::complex<double> G_boundary_eval(const Polypol& p, std::complex<double> t, const TransformOptions& opts = {});

/// F(t, it) by the radial boundary form.
std::complex<double> restricted_transform_eval(const Polypol& p, std::complex<double> t,
                                               const TransformOptions& opts = {});

struct RestrictionEntry {
    int j = 0;
    CNumber restricted;    ///< coefficient of t^j in F(t, it), from the moment series
    CNumber expected;      ///< (j+1)(j+2) μ_j from the boundary moments
    CNumber integrated;    ///< after t^{-2} ∫_0^t s · ds
    CNumber weighted;      ///< (j+1) μ_j
    double delta_restricted = 0.0;
    double delta_integrated = 0.0;
    bool pass = false;
};

struct RestrictionReport {
    int order = 0;
    bool exact = false;
    double tolerance = 0.0;
    std::vector<RestrictionEntry> entries;
    bool passed() const;
    nlohmann::json to_json() const;
};

RestrictionReport restriction_identity_check(const Polypol& p, int order, double tol = 1e-9,
                                             const QuadratureOptions& opts = {});

}  // namespace polypol
