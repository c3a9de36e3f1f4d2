#include "polypol/algebra.hpp"

#include <cmath>
#include <numbers>

namespace polypol {

QPoly2 bareiss_determinant(std::vector<std::vector<QPoly2>> m) {
    const std::size_t n = m.size();
    if (n == 0) return QPoly2(Rational(1));
    int sign = 1;
    QPoly2 prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = QPoly2{};
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

QPoly2 resultant_in_tau(const TauPoly& p, const TauPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    const int dp = p.degree(), dq = q.degree();
    if (dp == 0 && dq == 0) throw std::invalid_argument("resultant: both inputs have tau-degree 0, nothing to eliminate");
    const std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<QPoly2>> s(n, std::vector<QPoly2>(n));
    for (int r = 0; r < dq; ++r)
        for (int k = dp; k >= 0; --k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + dp - k)] = p.coefficients()[static_cast<std::size_t>(k)];
    for (int r = 0; r < dp; ++r)
        for (int k = dq; k >= 0; --k)
            s[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + dq - k)] = q.coefficients()[static_cast<std::size_t>(k)];
    return bareiss_determinant(std::move(s));
}

Rational resultant(const QPoly1& p, const QPoly1& q) {
    auto lift = [](const QPoly1& a) {
        std::vector<QPoly2> c;
        for (const auto& r : a.coefficients()) c.emplace_back(r);
        return TauPoly(std::move(c));
    };
    return resultant_in_tau(lift(p), lift(q)).coeff(0, 0);
}

// ---- Sturm isolation ---------------------------------------------------------

std::vector<QPoly1> sturm_sequence(const QPoly1& p) {
    std::vector<QPoly1> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        QPoly1 r = divmod(seq[seq.size() - 2], seq.back()).second;
        seq.push_back(-r);
    }
    seq.pop_back();
    return seq;
}

namespace {

int sign_variations(const std::vector<QPoly1>& seq, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
        int sg = s(x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

QPoly1 linear_factor(const Rational& r) { return QPoly1{-r, Rational(1)}; }

// Divides out every power of (τ − r).
QPoly1 deflate(QPoly1 p, const Rational& r, int* mult = nullptr) {
    int k = 0;
    while (p.degree() > 0 && p(r).is_zero()) {
        p = exact_quotient(p, linear_factor(r));
        ++k;
    }
    if (mult) *mult = k;
    return p;
}

struct Bracket {
    Rational lo, hi;
    std::optional<Rational> exact;
};

// Roots of square-free s in (lo, hi] isolated into brackets of width ≤ width.
// s(lo) must be nonzero.
void isolate(const QPoly1& s, const std::vector<QPoly1>& seq, const Rational& lo, const Rational& hi, int vlo,
             int vhi, const Rational& width, std::vector<Bracket>& out) {
    const int n = vlo - vhi;
    if (n <= 0) return;
    if (n == 1) {
        if (s(hi).is_zero()) {
            out.push_back({hi, hi, hi});
            return;
        }
        Rational a = lo, b = hi;
        int sa = s(a).sign();
        while (b - a > width) {
            Rational mid = (a + b) / Rational(2);
            int sm = s(mid).sign();
            if (sm == 0) {
                out.push_back({mid, mid, mid});
                return;
            }
            if (sm == sa) a = mid;
            else b = mid;
        }
        out.push_back({a, b, std::nullopt});
        return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (s(mid).is_zero()) {
        // shift the split point off the root; the root is recovered in the left half
        Rational off = (hi - mid) / Rational(3);
        while (s(mid + off).is_zero()) off /= Rational(2);
        mid += off;
    }
    int vmid = sign_variations(seq, mid);
    isolate(s, seq, lo, mid, vlo, vmid, width, out);
    isolate(s, seq, mid, hi, vmid, vhi, width, out);
}

std::vector<Bracket> isolate_all(const QPoly1& s, const Rational& lo, const Rational& hi, const Rational& width) {
    std::vector<Bracket> out;
    QPoly1 work = s;
    if (work(lo).is_zero()) {
        out.push_back({lo, lo, lo});
        work = deflate(work, lo);
    }
    if (work.degree() <= 0 || hi <= lo) return out;
    auto seq = sturm_sequence(work);
    isolate(work, seq, lo, hi, sign_variations(seq, lo), sign_variations(seq, hi), width, out);
    return out;
}

Rational cauchy_bound(const QPoly1& p) {
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = abs(p.coefficients()[static_cast<std::size_t>(k)] / p.leading());
        if (r > m) m = r;
    }
    return m + Rational(1);
}

}  // namespace

std::vector<RealRoot> real_roots(const QPoly1& p, const Rational& lo, const Rational& hi, double tol) {
    if (p.is_zero()) throw std::invalid_argument("real_roots of the zero polynomial");
    std::vector<RealRoot> roots;
    auto factors = squarefree_decomposition(p);
    Rational width = Rational::from_double(tol);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].degree() <= 0) continue;
        for (auto& b : isolate_all(factors[k], lo, hi, width)) {
            RealRoot r;
            r.multiplicity = static_cast<int>(k) + 1;
            r.lo = b.lo;
            r.hi = b.hi;
            r.exact = b.exact;
            r.value = b.exact ? b.exact->to_double() : ((b.lo + b.hi) / Rational(2)).to_double();
            roots.push_back(std::move(r));
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
    return roots;
}

std::vector<RealRoot> real_roots(const Poly1<double>& p, double lo, double hi, double tol) {
    std::vector<Rational> c;
    for (double v : p.coefficients()) c.push_back(Rational::from_double(v));
    return real_roots(QPoly1(std::move(c)), Rational::from_double(lo), Rational::from_double(hi), tol);
}

int count_real_roots(const QPoly1& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots of the zero polynomial");
    if (p.degree() == 0 || hi < lo) return 0;
    int extra = 0;
    QPoly1 work = p;
    if (work(lo).is_zero()) {
        extra = 1;
        work = deflate(work, lo);
        if (work.degree() <= 0) return extra;
    }
    auto seq = sturm_sequence(work);
    return extra + sign_variations(seq, lo) - sign_variations(seq, hi);
}

std::vector<std::pair<Rational, int>> rational_roots(const QPoly1& p) {
    std::vector<std::pair<Rational, int>> out;
    if (p.degree() <= 0) return out;
    auto factors = squarefree_decomposition(p);
    const Rational width = Rational(1) / Rational(mpz_class("1000000000000000000000000000000"), mpz_class(1));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& s = factors[k];
        if (s.degree() <= 0) continue;
        Rational bound = cauchy_bound(s);
        for (auto& b : isolate_all(s, -bound, bound, width)) {
            Rational cand = b.exact ? *b.exact : simplest_between(b.lo, b.hi);
            if (s(cand).is_zero()) out.emplace_back(cand, static_cast<int>(k) + 1);
        }
    }
    return out;
}

// ---- complex roots -----------------------------------------------------------

std::vector<std::complex<double>> complex_roots(const Poly1<std::complex<double>>& p_in) {
    using C = std::complex<double>;
    if (p_in.degree() <= 0) return {};
    // strip exact zero roots first
    std::vector<C> coeffs = p_in.coefficients();
    std::vector<C> roots;
    std::size_t shift = 0;
    while (shift < coeffs.size() && coeffs[shift] == C(0.0)) ++shift;
    roots.assign(shift, C(0.0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
    Poly1<C> p(coeffs);
    const int n = p.degree();
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    Poly1<C> dp = p.derivative();
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(p.coeff(k) / p.leading()), 1.0 / (n - k)));
    radius = std::max(radius, 1e-3);
    std::vector<C> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
    for (int iter = 0; iter < 500; ++iter) {
        double max_step = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            C pv = p(z[k]), dv = dp(z[k]);
            if (pv == C(0.0)) continue;
            C ratio = pv / dv;
            C sum(0.0);
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) sum += C(1.0) / (z[k] - z[j]);
            C w = ratio / (C(1.0) - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[k] -= w;
            max_step = std::max(max_step, std::abs(w) / std::max(1.0, std::abs(z[k])));
        }
        if (max_step < 1e-16) break;
    }
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            C dv = dp(r);
            if (dv == C(0.0)) break;
            C step = p(r) / dv;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            if (std::abs(p(r - step)) >= std::abs(p(r))) break;
            r -= step;
        }
        roots.push_back(r);
    }
    return roots;
}

std::vector<std::complex<double>> complex_roots(const QPoly1& p) {
    return complex_roots(p.cast<std::complex<double>>());
}

// ---- serialization -----------------------------------------------------------

nlohmann::json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) return Rational::from_double(j.get<double>());
    throw std::invalid_argument("expected a rational literal, got " + j.dump());
}

nlohmann::json number_to_json(const Number& n) {
    if (n.exact) return n.exact->to_string();
    return n.value;
}

nlohmann::json poly2_to_json(const QPoly2& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) out.push_back({m.i, m.j, c.to_string()});
    return out;
}

QPoly2 poly2_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("Poly2 JSON must be an array of [i, j, \"p/q\"] triples");
    QPoly2 p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("malformed Poly2 term " + t.dump());
        int i = t[0].get<int>(), k = t[1].get<int>();
        if (i < 0 || k < 0) throw std::invalid_argument("negative exponent in Poly2 term");
        p.add_term({i, k}, rational_from_json(t[2]));
    }
    return p;
}

nlohmann::json poly1_to_json(const QPoly1& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.to_string());
    return out;
}

QPoly1 poly1_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("Poly1 JSON must be an array of coefficients");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return QPoly1(std::move(c));
}

nlohmann::json ratfunc2_to_json(const RatFunc2& f) {
    return {{"num", poly2_to_json(f.num())}, {"den", poly2_to_json(f.den())}};
}

}  // namespace polypol
