#include "polypol/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>

namespace polypol {

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

struct Panel {
    double a, b;
    std::vector<double> value;  // order-64 result
    std::vector<double> l1;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate_panel(const VectorIntegrand& f, int dim, double a, double b) {
    const auto& lo = gauss_legendre(32);
    const auto& hi = gauss_legendre(64);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    std::vector<double> buf(static_cast<std::size_t>(dim));
    std::vector<double> r32(static_cast<std::size_t>(dim), 0.0), r64(r32), l1(r32);
    for (std::size_t i = 0; i < lo.nodes.size(); ++i) {
        f(mid + half * lo.nodes[i], buf.data());
        for (int k = 0; k < dim; ++k) r32[static_cast<std::size_t>(k)] += lo.weights[i] * buf[static_cast<std::size_t>(k)];
    }
    for (std::size_t i = 0; i < hi.nodes.size(); ++i) {
        f(mid + half * hi.nodes[i], buf.data());
        for (int k = 0; k < dim; ++k) {
            r64[static_cast<std::size_t>(k)] += hi.weights[i] * buf[static_cast<std::size_t>(k)];
            l1[static_cast<std::size_t>(k)] += hi.weights[i] * std::abs(buf[static_cast<std::size_t>(k)]);
        }
    }
    Panel p{a, b, {}, {}, 0.0};
    for (int k = 0; k < dim; ++k) {
        auto kk = static_cast<std::size_t>(k);
        r64[kk] *= half;
        l1[kk] *= std::abs(half);
        double e = std::abs(half * r32[kk] - r64[kk]);
        if (!std::isfinite(e) || !std::isfinite(r64[kk])) e = std::numeric_limits<double>::infinity();
        p.err = std::max(p.err, e);
    }
    p.value = std::move(r64);
    p.l1 = std::move(l1);
    return p;
}

}  // namespace

QuadratureResult integrate_adaptive(const VectorIntegrand& f, int dim, double a, double b,
                                    const QuadratureOptions& opts) {
    std::priority_queue<Panel> heap;
    heap.push(evaluate_panel(f, dim, a, b));
    auto totals = [&](std::vector<double>& val, std::vector<double>& l1, double& err) {
        auto copy = heap;
        val.assign(static_cast<std::size_t>(dim), 0.0);
        l1.assign(static_cast<std::size_t>(dim), 0.0);
        err = 0.0;
        while (!copy.empty()) {
            const Panel& p = copy.top();
            for (int k = 0; k < dim; ++k) {
                val[static_cast<std::size_t>(k)] += p.value[static_cast<std::size_t>(k)];
                l1[static_cast<std::size_t>(k)] += p.l1[static_cast<std::size_t>(k)];
            }
            err += p.err;
            copy.pop();
        }
    };
    // running sums avoid rescanning the heap every step
    std::vector<double> l1_total = heap.top().l1;
    double err_total = heap.top().err;
    int panels = 1;
    auto tolerance = [&]() {
        double scale = 0.0;
        for (double v : l1_total) scale = std::max(scale, v);
        return std::max(opts.abs_tol, opts.rel_tol * scale);
    };
    while (!(err_total <= tolerance())) {
        if (panels >= opts.max_panels) {
            std::vector<double> val, l1;
            double err;
            totals(val, l1, err);
            throw QuadratureError("quadrature did not converge within " + std::to_string(opts.max_panels) +
                                      " panels (error estimate " + std::to_string(err) + ")",
                                  err);
        }
        Panel worst = heap.top();
        heap.pop();
        double m = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, dim, worst.a, m), right = evaluate_panel(f, dim, m, worst.b);
        err_total += left.err + right.err - worst.err;
        for (int k = 0; k < dim; ++k) {
            auto kk = static_cast<std::size_t>(k);
            l1_total[kk] += left.l1[kk] + right.l1[kk] - worst.l1[kk];
        }
        heap.push(std::move(left));
        heap.push(std::move(right));
        ++panels;
        if (!std::isfinite(err_total)) {
            // recompute from scratch once an infinite panel has been split away
            std::vector<double> val;
            totals(val, l1_total, err_total);
        }
    }
    QuadratureResult out;
    std::vector<double> l1;
    totals(out.values, l1, out.error_estimate);
    out.panels = panels;
    return out;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts,
                          double* error_estimate) {
    auto r = integrate_adaptive([&](double t, double* out) { out[0] = f(t); }, 1, a, b, opts);
    if (error_estimate) *error_estimate = r.error_estimate;
    return r.values[0];
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                        const QuadratureOptions& opts, double* error_estimate) {
    auto r = integrate_adaptive(
        [&](double t, double* out) {
            auto z = f(t);
            out[0] = z.real();
            out[1] = z.imag();
        },
        2, a, b, opts);
    if (error_estimate) *error_estimate = r.error_estimate;
    return {r.values[0], r.values[1]};
}

}  // namespace polypol
