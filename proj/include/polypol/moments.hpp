#pragma once

#include <map>
#include <string>

#include "polypol/polypol.hpp"

namespace polypol {

using Index2 = std::pair<int, int>;

struct MomentTable {
    int max_degree = 0;
    std::map<Index2, Number> values;
    std::string fingerprint;

    const Number& at(int i, int j) const { return values.at({i, j}); }
    bool exact() const;
    /// {"(i,j)": "p/q" | float}
    nlohmann::json to_json() const;
    /// Columns i, j, value.
    std::string to_csv() const;
};

/// Truncated bivariate Taylor series; univariate series use j = 0.
struct SeriesExpansion {
    int order = 0;
    std::map<Index2, Number> coefficients;

    const Number& at(int i, int j) const { return coefficients.at({i, j}); }
    double eval(double u, double v) const;
    nlohmann::json to_json() const;
};

/// Short stable hash of the region JSON.
std::string region_fingerprint(const Polypol& p);

/// ∬ x^i y^j dx dy = (1/(i+1)) ∮ x^{i+1} y^j dy. Exact when every arc is polynomial.
Number moment(const Polypol& p, int i, int j, const QuadratureOptions& opts = {});

/// The dx reduction −(1/(j+1)) ∮ x^i y^{j+1} dx, kept as an independent oracle.
Number moment_dx(const Polypol& p, int i, int j, const QuadratureOptions& opts = {});

/// All moments with i + j ≤ max_degree from one shared quadrature pass per arc.
MomentTable moment_table(const Polypol& p, int max_degree, const QuadratureOptions& opts = {});

/// Coefficient of u^i v^j is ((i+j+2)!/(i! j!))·m_ij.
SeriesExpansion normalized_mgf_series(const Polypol& p, int order, const QuadratureOptions& opts = {});
SeriesExpansion normalized_mgf_series(const MomentTable& table);

}  // namespace polypol
