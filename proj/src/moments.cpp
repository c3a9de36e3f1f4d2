#include "polypol/moments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace polypol {

bool MomentTable::exact() const {
    for (const auto& [k, v] : values)
        if (!v.is_exact()) return false;
    return true;
}

namespace {

std::string key(const Index2& k) { return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"; }

nlohmann::json number_map_json(const std::map<Index2, Number>& m) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, v] : m) out[key(k)] = number_to_json(v);
    return out;
}

std::vector<Index2> indices_up_to(int d) {
    std::vector<Index2> out;
    for (int s = 0; s <= d; ++s)
        for (int i = s; i >= 0; --i) out.emplace_back(i, s - i);
    return out;
}

Rational factorial(int n) {
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

// Per-arc contributions for a list of monomials. dy-form: x^{i+1} y^j y'/(i+1);
// dx-form: −x^i y^{j+1} x'/(j+1).
std::vector<Number> boundary_moments(const Polypol& p, const std::vector<Index2>& idx, bool dy_form,
                                     const QuadratureOptions& opts) {
    const std::size_t m = idx.size();
    std::vector<Rational> exact(m, Rational(0));
    std::vector<double> numeric(m, 0.0);
    bool all_exact = true;
    for (const auto& arc : p.arcs()) {
        if (arc.is_polynomial()) {
            const QPoly1& x = arc.x().num();
            const QPoly1& y = arc.y().num();
            for (std::size_t k = 0; k < m; ++k) {
                auto [i, j] = idx[k];
                QPoly1 w = dy_form ? pow(x, static_cast<unsigned>(i + 1)) * pow(y, static_cast<unsigned>(j)) *
                                         y.derivative() * (Rational(1) / Rational(i + 1))
                                   : pow(x, static_cast<unsigned>(i)) * pow(y, static_cast<unsigned>(j + 1)) *
                                         x.derivative() * (Rational(-1) / Rational(j + 1));
                exact[k] += integrate(w, arc.a(), arc.b());
            }
            continue;
        }
        all_exact = false;
        int maxpow = 0;
        for (auto [i, j] : idx) maxpow = std::max({maxpow, i + 1, j + 1});
        std::vector<double> xs(static_cast<std::size_t>(maxpow) + 1, 1.0), ys(xs);
        auto f = [&](double t, double* out) {
            double x, y, xp, yp;
            arc.eval(t, x, y, xp, yp);
            for (int k = 1; k <= maxpow; ++k) {
                xs[static_cast<std::size_t>(k)] = xs[static_cast<std::size_t>(k) - 1] * x;
                ys[static_cast<std::size_t>(k)] = ys[static_cast<std::size_t>(k) - 1] * y;
            }
            for (std::size_t k = 0; k < m; ++k) {
                auto [i, j] = idx[k];
                out[k] = dy_form ? xs[static_cast<std::size_t>(i + 1)] * ys[static_cast<std::size_t>(j)] * yp / (i + 1)
                                 : -xs[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(j + 1)] * xp / (j + 1);
            }
        };
        auto r = integrate_adaptive(f, static_cast<int>(m), arc.a().to_double(), arc.b().to_double(), opts);
        for (std::size_t k = 0; k < m; ++k) numeric[k] += r.values[k];
    }
    std::vector<Number> out;
    for (std::size_t k = 0; k < m; ++k)
        out.push_back(all_exact ? Number(exact[k]) : Number(exact[k].to_double() + numeric[k]));
    return out;
}

void check_indices(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("moment indices must be nonnegative");
}

}  // namespace

nlohmann::json MomentTable::to_json() const { return number_map_json(values); }

std::string MomentTable::to_csv() const {
    std::ostringstream os;
    os << "i,j,value\n";
    for (const auto& [k, v] : values) os << k.first << "," << k.second << "," << v.to_string() << "\n";
    return os.str();
}

double SeriesExpansion::eval(double u, double v) const {
    double s = 0.0;
    for (const auto& [k, c] : coefficients) s += c.value * std::pow(u, k.first) * std::pow(v, k.second);
    return s;
}

nlohmann::json SeriesExpansion::to_json() const {
    return {{"order", order}, {"coefficients", number_map_json(coefficients)}};
}

std::string region_fingerprint(const Polypol& p) {
    // FNV-1a over the canonical JSON text
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_json(p).dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Number moment(const Polypol& p, int i, int j, const QuadratureOptions& opts) {
    check_indices(i, j);
    return boundary_moments(p, {{i, j}}, true, opts)[0];
}

Number moment_dx(const Polypol& p, int i, int j, const QuadratureOptions& opts) {
    check_indices(i, j);
    return boundary_moments(p, {{i, j}}, false, opts)[0];
}

MomentTable moment_table(const Polypol& p, int max_degree, const QuadratureOptions& opts) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    auto idx = indices_up_to(max_degree);
    auto vals = boundary_moments(p, idx, true, opts);
    MomentTable t;
    t.max_degree = max_degree;
    t.fingerprint = region_fingerprint(p);
    for (std::size_t k = 0; k < idx.size(); ++k) t.values[idx[k]] = vals[k];
    return t;
}

SeriesExpansion normalized_mgf_series(const MomentTable& table) {
    SeriesExpansion s;
    s.order = table.max_degree;
    for (const auto& [k, m] : table.values) {
        auto [i, j] = k;
        Rational w = factorial(i + j + 2) / (factorial(i) * factorial(j));
        s.coefficients[k] = m.exact ? Number(w * *m.exact) : Number(w.to_double() * m.value);
    }
    return s;
}

SeriesExpansion normalized_mgf_series(const Polypol& p, int order, const QuadratureOptions& opts) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return normalized_mgf_series(moment_table(p, order, opts));
}

}  // namespace polypol
