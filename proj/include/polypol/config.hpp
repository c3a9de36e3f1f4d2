#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "polypol/singular.hpp"

namespace polypol {

enum class OutputFormat { json, csv };

/// Run-wide settings. Defaults can be overridden by the environment:
/// POLYPOL_QUAD_RTOL, POLYPOL_ROOT_TOL, POLYPOL_PROXIMITY_TOL, POLYPOL_BLOWUP, POLYPOL_SEED.
struct RunConfig {
    Tier tier = Tier::exact;
    double quad_rel_tol = 1e-12;
    double root_tol = 1e-9;
    double proximity_tol = 1e-3;
    double blowup = 1e6;
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 20240101;

    static RunConfig from_environment();

    /// Throws std::invalid_argument unless every tolerance is positive and finite.
    void validate() const;

    TransformOptions transform_options() const;
    QuadratureOptions quadrature_options() const;
    ScanOptions scan_options() const;

    nlohmann::json to_json() const;
};

Tier parse_tier(const std::string& s);
OutputFormat parse_format(const std::string& s);

}  // namespace polypol
