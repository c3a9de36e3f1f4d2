#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polypol/poly1.hpp"

namespace polypol {

/// Exponent pair of x^i y^j.
struct Monomial {
    int i = 0;
    int j = 0;
    int degree() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: total degree first, then higher x-power first. Iteration in
/// this order is the canonical serialization order (1, x, y, x², xy, y², …).
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.i > b.i;
    }
};

/// Sparse bivariate polynomial. Zero coefficients are never stored.
template <class T>
class Poly2 {
public:
    using Coeff = T;
    using TermMap = std::map<Monomial, T, GradedLex>;

    Poly2() = default;
    explicit Poly2(const T& c) { add_term({0, 0}, c); }
    explicit Poly2(TermMap terms) : terms_(std::move(terms)) { prune(); }

    static Poly2 x() { return term(1, 0, RingTraits<T>::one()); }
    static Poly2 y() { return term(0, 1, RingTraits<T>::one()); }
    static Poly2 term(int i, int j, const T& c) {
        Poly2 p;
        p.add_term({i, j}, c);
        return p;
    }
    /// a + b·x + c·y
    static Poly2 affine(const T& a, const T& b, const T& c) {
        Poly2 p(a);
        p.add_term({1, 0}, b);
        p.add_term({0, 1}, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

    T coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? RingTraits<T>::zero() : it->second;
    }
    int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
    int degree_x() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.i);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.j);
        return d;
    }
    /// Largest term in graded order (used as the division leading term).
    const std::pair<const Monomial, T>& leading_term() const { return *terms_.rbegin(); }
    /// First term in graded order (normalization anchor).
    const std::pair<const Monomial, T>& first_term() const { return *terms_.begin(); }

    void add_term(Monomial m, const T& c) {
        if (RingTraits<T>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (RingTraits<T>::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly2& operator*=(const T& s) {
        if (RingTraits<T>::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        prune();
        return *this;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    Poly2 operator-() const {
        Poly2 r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const T& s) { return a *= s; }
    friend Poly2 operator*(const T& s, Poly2 a) { return a *= s; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
        return out;
    }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

    Poly2 dx() const {
        Poly2 out;
        for (const auto& [m, c] : terms_)
            if (m.i > 0) out.add_term({m.i - 1, m.j}, c * coerce<T>(Rational(m.i)));
        return out;
    }
    Poly2 dy() const {
        Poly2 out;
        for (const auto& [m, c] : terms_)
            if (m.j > 0) out.add_term({m.i, m.j - 1}, c * coerce<T>(Rational(m.j)));
        return out;
    }

    T operator()(const T& xv, const T& yv) const { return eval_as<T>(xv, yv); }

    template <class U>
    U eval_as(const U& xv, const U& yv) const {
        // per-term powers; degrees are small in every use
        U acc = RingTraits<U>::zero();
        for (const auto& [m, c] : terms_) {
            U t = coerce<U>(c);
            for (int k = 0; k < m.i; ++k) t = t * xv;
            for (int k = 0; k < m.j; ++k) t = t * yv;
            acc = acc + t;
        }
        return acc;
    }

    /// Value of the degree-d homogenization at the projective point (X:Y:Z).
    template <class U>
    U eval_homogeneous(const U& X, const U& Y, const U& Z, int d) const {
        U acc = RingTraits<U>::zero();
        for (const auto& [m, c] : terms_) {
            U t = coerce<U>(c);
            for (int k = 0; k < m.i; ++k) t = t * X;
            for (int k = 0; k < m.j; ++k) t = t * Y;
            for (int k = 0; k < d - m.degree(); ++k) t = t * Z;
            acc = acc + t;
        }
        return acc;
    }

    template <class U>
    Poly2<U> cast() const {
        Poly2<U> out;
        for (const auto& [m, c] : terms_) out.add_term(m, coerce<U>(c));
        return out;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = RingTraits<T>::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }

    TermMap terms_;
};

template <class T>
struct RingTraits<Poly2<T>> {
    static Poly2<T> zero() { return {}; }
    static Poly2<T> one() { return Poly2<T>(RingTraits<T>::one()); }
    static bool is_zero(const Poly2<T>& p) { return p.is_zero(); }
};

using QPoly1 = Poly1<Rational>;
using QPoly2 = Poly2<Rational>;

/// Multivariate division by a single divisor in graded order; the remainder is
/// zero exactly when b divides a.
std::pair<QPoly2, QPoly2> divmod(const QPoly2& a, const QPoly2& b);
QPoly2 exact_quotient(const QPoly2& a, const QPoly2& b);
bool divides(const QPoly2& b, const QPoly2& a);

/// View as a polynomial in x with coefficients in Q[y] (or y over Q[x]).
Poly1<QPoly1> to_recursive_in_x(const QPoly2& p);
Poly1<QPoly1> to_recursive_in_y(const QPoly2& p);
QPoly2 from_recursive_in_x(const Poly1<QPoly1>& p);
QPoly2 from_recursive_in_y(const Poly1<QPoly1>& p);

QPoly2 from_univariate_x(const QPoly1& p);
QPoly2 from_univariate_y(const QPoly1& p);

/// Greatest common divisor in Q[x, y], normalized by `normalize_sign_content`.
QPoly2 gcd(const QPoly2& a, const QPoly2& b);

/// Rational content: the primitive integer polynomial p / content(p) has
/// coprime integer coefficients and a positive first (graded-order) term.
Rational content(const QPoly2& p);
QPoly2 normalize_sign_content(const QPoly2& p);

/// Square-free part f / gcd(f, f_x, f_y).
QPoly2 squarefree_part(const QPoly2& p);

/// Factor depending only on x (resp. y) that divides p; its cofactor has no
/// such factor. Returned as (univariate part, cofactor).
std::pair<QPoly2, QPoly2> split_content_in_x(const QPoly2& p);
std::pair<QPoly2, QPoly2> split_content_in_y(const QPoly2& p);

/// Scalar multiple test: a == c·b for some nonzero rational c.
bool proportional(const QPoly2& a, const QPoly2& b);

/// f(a, b) for polynomial substitutions.
QPoly2 substitute(const QPoly2& f, const QPoly2& a, const QPoly2& b);

std::string to_string(const QPoly2& p, const char* xname = "x", const char* yname = "y");

}  // namespace polypol
