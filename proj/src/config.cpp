#include "polypol/config.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace polypol {

namespace {

double env_double(const char* name, double fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0') throw std::invalid_argument(std::string(name) + " is not a number: '" + s + "'");
    return v;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

}  // namespace

RunConfig RunConfig::from_environment() {
    RunConfig c;
    c.quad_rel_tol = env_double("POLYPOL_QUAD_RTOL", c.quad_rel_tol);
    c.root_tol = env_double("POLYPOL_ROOT_TOL", c.root_tol);
    c.proximity_tol = env_double("POLYPOL_PROXIMITY_TOL", c.proximity_tol);
    c.blowup = env_double("POLYPOL_BLOWUP", c.blowup);
    if (const char* s = std::getenv("POLYPOL_SEED"); s && *s) {
        char* end = nullptr;
        c.seed = std::strtoull(s, &end, 10);
        if (*end != '\0') throw std::invalid_argument(std::string("POLYPOL_SEED is not an integer: '") + s + "'");
    }
    c.validate();
    return c;
}

void RunConfig::validate() const {
    require_positive(quad_rel_tol, "quadrature rel-tol");
    require_positive(root_tol, "root tol");
    require_positive(proximity_tol, "proximity tol");
    require_positive(blowup, "blow-up threshold");
}

QuadratureOptions RunConfig::quadrature_options() const {
    QuadratureOptions q;
    q.rel_tol = quad_rel_tol;
    return q;
}

TransformOptions RunConfig::transform_options() const {
    TransformOptions t;
    t.quad = quadrature_options();
    t.root_margin = root_tol;
    return t;
}

ScanOptions RunConfig::scan_options() const {
    ScanOptions s;
    s.transform = transform_options();
    s.blowup = blowup;
    s.proximity = proximity_tol;
    return s;
}

nlohmann::json RunConfig::to_json() const {
    return {{"tier", tier == Tier::exact ? "exact" : "float"},
            {"tolerances",
             {{"quad_rel_tol", quad_rel_tol},
              {"root_tol", root_tol},
              {"proximity_tol", proximity_tol},
              {"blowup", blowup}}},
            {"format", format == OutputFormat::json ? "json" : "csv"},
            {"seed", seed}};
}

Tier parse_tier(const std::string& s) {
    if (s == "exact") return Tier::exact;
    if (s == "float") return Tier::float_tier;
    throw std::invalid_argument("tier must be exact or float");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("format must be json or csv");
}

}  // namespace polypol
