#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace polypol {

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_panels = 4096;
};

/// Thrown when the subdivision budget is exhausted before the tolerance is met.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
    double error_estimate() const { return estimate_; }

private:
    double estimate_;
};

struct QuadratureResult {
    std::vector<double> values;
    double error_estimate = 0.0;
    int panels = 0;
};

/// Gauss–Legendre nodes and weights on [−1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Vector-valued integrand: fills `out` (size `dim`) at parameter t.
using VectorIntegrand = std::function<void(double t, double* out)>;

/// Adaptive Gauss–Legendre of order 32 per panel with order-64 error
/// estimates; the panel with the largest estimate is bisected until the total
/// estimate drops below max(abs_tol, rel_tol·‖f‖₁) in every component.
QuadratureResult integrate_adaptive(const VectorIntegrand& f, int dim, double a, double b,
                                    const QuadratureOptions& opts = {});

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts = {}, double* error_estimate = nullptr);

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                     const QuadratureOptions& opts = {}, double* error_estimate = nullptr);

}  // namespace polypol
