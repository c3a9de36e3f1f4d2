#include <numeric>
#include <sstream>

#include "polypol/poly2.hpp"

namespace polypol {

std::vector<QPoly1> squarefree_decomposition(const QPoly1& p) {
    std::vector<QPoly1> out;
    if (p.degree() <= 0) return out;
    QPoly1 dp = p.derivative();
    QPoly1 a = gcd(p, dp);
    QPoly1 b = exact_quotient(p, a);
    QPoly1 c = exact_quotient(dp, a);
    QPoly1 d = c - b.derivative();
    while (b.degree() > 0) {
        QPoly1 s = gcd(b, d);
        out.push_back(monic(s));
        b = exact_quotient(b, s);
        c = exact_quotient(d, s);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() <= 0) out.pop_back();
    return out;
}

QPoly1 primitive_integer(const QPoly1& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading().sign() < 0) scale = -scale;
    return p * scale;
}

// ---- bivariate ---------------------------------------------------------------

std::pair<QPoly2, QPoly2> divmod(const QPoly2& a, const QPoly2& b) {
    if (b.is_zero()) throw std::domain_error("bivariate division by zero");
    const auto& [lb, cb] = b.leading_term();
    QPoly2 q, r, p = a;
    while (!p.is_zero()) {
        const auto [m, c] = p.leading_term();
        QPoly2 t = QPoly2::term(m.i, m.j, c);
        if (m.i >= lb.i && m.j >= lb.j) {
            QPoly2 f = QPoly2::term(m.i - lb.i, m.j - lb.j, c / cb);
            q += f;
            p -= f * b;
        } else {
            r += t;
            p -= t;
        }
    }
    return {q, r};
}

QPoly2 exact_quotient(const QPoly2& a, const QPoly2& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("bivariate division is not exact");
    return q;
}

bool divides(const QPoly2& b, const QPoly2& a) { return divmod(a, b).second.is_zero(); }

Poly1<QPoly1> to_recursive_in_x(const QPoly2& p) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(std::max(p.degree_x(), 0)) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& row = rows[static_cast<std::size_t>(m.i)];
        if (row.size() <= static_cast<std::size_t>(m.j)) row.resize(static_cast<std::size_t>(m.j) + 1);
        row[static_cast<std::size_t>(m.j)] = c;
    }
    std::vector<QPoly1> coeffs;
    for (auto& r : rows) coeffs.emplace_back(std::move(r));
    return Poly1<QPoly1>(std::move(coeffs));
}

Poly1<QPoly1> to_recursive_in_y(const QPoly2& p) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(std::max(p.degree_y(), 0)) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& row = rows[static_cast<std::size_t>(m.j)];
        if (row.size() <= static_cast<std::size_t>(m.i)) row.resize(static_cast<std::size_t>(m.i) + 1);
        row[static_cast<std::size_t>(m.i)] = c;
    }
    std::vector<QPoly1> coeffs;
    for (auto& r : rows) coeffs.emplace_back(std::move(r));
    return Poly1<QPoly1>(std::move(coeffs));
}

QPoly2 from_recursive_in_x(const Poly1<QPoly1>& p) {
    QPoly2 out;
    for (int i = 0; i <= p.degree(); ++i) {
        const auto& c = p.coefficients()[static_cast<std::size_t>(i)];
        for (int j = 0; j <= c.degree(); ++j) out.add_term({i, j}, c.coefficients()[static_cast<std::size_t>(j)]);
    }
    return out;
}

QPoly2 from_recursive_in_y(const Poly1<QPoly1>& p) {
    QPoly2 out;
    for (int j = 0; j <= p.degree(); ++j) {
        const auto& c = p.coefficients()[static_cast<std::size_t>(j)];
        for (int i = 0; i <= c.degree(); ++i) out.add_term({i, j}, c.coefficients()[static_cast<std::size_t>(i)]);
    }
    return out;
}

QPoly2 from_univariate_x(const QPoly1& p) {
    QPoly2 out;
    for (int i = 0; i <= p.degree(); ++i) out.add_term({i, 0}, p.coefficients()[static_cast<std::size_t>(i)]);
    return out;
}

QPoly2 from_univariate_y(const QPoly1& p) {
    QPoly2 out;
    for (int j = 0; j <= p.degree(); ++j) out.add_term({0, j}, p.coefficients()[static_cast<std::size_t>(j)]);
    return out;
}

namespace {

QPoly1 coefficient_content(const Poly1<QPoly1>& p) {
    QPoly1 g;
    for (const auto& c : p.coefficients()) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

Poly1<QPoly1> primitive_part(const Poly1<QPoly1>& p) {
    if (p.is_zero()) return p;
    QPoly1 cont = coefficient_content(p);
    std::vector<QPoly1> out;
    for (const auto& c : p.coefficients()) out.push_back(exact_quotient(c, cont));
    return Poly1<QPoly1>(std::move(out));
}

}  // namespace

Rational content(const QPoly2& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    }
    Rational cont(num_gcd, den_lcm);
    return p.first_term().second.sign() < 0 ? -cont : cont;
}

QPoly2 normalize_sign_content(const QPoly2& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / content(p));
}

QPoly2 gcd(const QPoly2& a, const QPoly2& b) {
    if (a.is_zero()) return normalize_sign_content(b);
    if (b.is_zero()) return normalize_sign_content(a);
    Poly1<QPoly1> A = to_recursive_in_x(a), B = to_recursive_in_x(b);
    QPoly1 common = gcd(coefficient_content(A), coefficient_content(B));
    Poly1<QPoly1> pa = primitive_part(A), pb = primitive_part(B);
    if (pa.degree() < pb.degree()) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly1<QPoly1> r = pseudo_remainder(pa, pb);
        pa = std::move(pb);
        pb = primitive_part(r);
    }
    pa = primitive_part(pa);
    std::vector<QPoly1> scaled;
    for (const auto& c : pa.coefficients()) scaled.push_back(c * common);
    return normalize_sign_content(from_recursive_in_x(Poly1<QPoly1>(std::move(scaled))));
}

QPoly2 squarefree_part(const QPoly2& p) {
    if (p.is_constant()) return p.is_zero() ? p : QPoly2(Rational(1));
    QPoly2 g = gcd(gcd(p, p.dx()), p.dy());
    return normalize_sign_content(exact_quotient(p, g));
}

std::pair<QPoly2, QPoly2> split_content_in_x(const QPoly2& p) {
    QPoly1 cont = coefficient_content(to_recursive_in_y(p));
    QPoly2 u = from_univariate_x(cont);
    return {normalize_sign_content(u), normalize_sign_content(exact_quotient(p, u))};
}

std::pair<QPoly2, QPoly2> split_content_in_y(const QPoly2& p) {
    QPoly1 cont = coefficient_content(to_recursive_in_x(p));
    QPoly2 u = from_univariate_y(cont);
    return {normalize_sign_content(u), normalize_sign_content(exact_quotient(p, u))};
}

bool proportional(const QPoly2& a, const QPoly2& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize_sign_content(a) == normalize_sign_content(b);
}

QPoly2 substitute(const QPoly2& f, const QPoly2& a, const QPoly2& b) {
    std::vector<QPoly2> apow{QPoly2(Rational(1))}, bpow{QPoly2(Rational(1))};
    QPoly2 out;
    for (const auto& [m, c] : f.terms()) {
        while (static_cast<int>(apow.size()) <= m.i) apow.push_back(apow.back() * a);
        while (static_cast<int>(bpow.size()) <= m.j) bpow.push_back(bpow.back() * b);
        out += apow[static_cast<std::size_t>(m.i)] * bpow[static_cast<std::size_t>(m.j)] * c;
    }
    return out;
}

std::string to_string(const QPoly2& p, const char* xname, const char* yname) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1) && m.degree() > 0;
        if (!unit) os << mag.to_string();
        auto var = [&](const char* name, int e, bool need_star) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
        };
        var(xname, m.i, !unit);
        var(yname, m.j, !unit || m.i > 0);
    }
    return os.str();
}

}  // namespace polypol
