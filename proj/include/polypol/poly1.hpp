#pragma once

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polypol/rational.hpp"

namespace polypol {

/// Zero/one/zero-test for coefficient rings. Specialized for every ring used
/// as a polynomial coefficient (including the polynomial types themselves).
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
};

template <>
struct RingTraits<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double d) { return d == 0.0; }
};

template <>
struct RingTraits<std::complex<double>> {
    static std::complex<double> zero() { return {}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& c) { return c == 0.0; }
};

template <>
struct RingTraits<GaussRational> {
    static GaussRational zero() { return {}; }
    static GaussRational one() { return GaussRational(1); }
    static bool is_zero(const GaussRational& c) { return c.is_zero(); }
};

/// Coefficient conversion between tiers (exact → binary64 → complex).
template <class To, class From>
To coerce(const From& v) {
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (std::is_same_v<From, Rational>) {
        if constexpr (std::is_constructible_v<To, Rational>) return To(v);
        else return To(v.to_double());
    } else if constexpr (std::is_same_v<From, GaussRational>) {
        return To(v.to_complex());
    } else {
        return To(v);
    }
}

/// Dense univariate polynomial, coefficient k multiplies τ^k. The zero
/// polynomial has no stored coefficients and degree −1.
template <class T>
class Poly1 {
public:
    using Coeff = T;

    Poly1() = default;
    Poly1(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Poly1(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Poly1 constant(T c) { return Poly1(std::vector<T>{std::move(c)}); }
    static Poly1 monomial(T c, int k) {
        std::vector<T> v(static_cast<std::size_t>(k) + 1, RingTraits<T>::zero());
        v.back() = std::move(c);
        return Poly1(std::move(v));
    }
    static Poly1 identity() { return monomial(RingTraits<T>::one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<T>& coefficients() const { return c_; }
    T coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)]
                                                             : RingTraits<T>::zero();
    }
    const T& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly1& operator+=(const Poly1& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingTraits<T>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly1& operator-=(const Poly1& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingTraits<T>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
    Poly1& operator*=(const T& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }
    Poly1 operator-() const {
        Poly1 r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, RingTraits<T>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (RingTraits<T>::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly1(std::move(out));
    }
    friend Poly1 operator*(Poly1 a, const T& s) { return a *= s; }
    friend Poly1 operator*(const T& s, Poly1 a) { return a *= s; }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

    Poly1 derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> out(c_.size() - 1, RingTraits<T>::zero());
        for (std::size_t k = 1; k < c_.size(); ++k) {
            T kk = coerce<T>(Rational(static_cast<long>(k)));
            out[k - 1] = c_[k] * kk;
        }
        return Poly1(std::move(out));
    }

    /// Horner evaluation in the coefficient ring.
    T operator()(const T& x) const {
        T acc = RingTraits<T>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation after coercing coefficients into U.
    template <class U>
    U eval_as(const U& x) const {
        U acc = RingTraits<U>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + coerce<U>(*it);
        return acc;
    }

    template <class U>
    Poly1<U> cast() const {
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(coerce<U>(c));
        return Poly1<U>(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && RingTraits<T>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
struct RingTraits<Poly1<T>> {
    static Poly1<T> zero() { return {}; }
    static Poly1<T> one() { return Poly1<T>::constant(RingTraits<T>::one()); }
    static bool is_zero(const Poly1<T>& p) { return p.is_zero(); }
};

// ---- field-coefficient operations -------------------------------------------

/// Euclidean division a = q·b + r with deg r < deg b.
template <class T>
std::pair<Poly1<T>, Poly1<T>> divmod(const Poly1<T>& a, const Poly1<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Poly1<T>{}, a};
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1), RingTraits<T>::zero());
    const T& lb = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        T f = rem[static_cast<std::size_t>(k)] / lb;
        quo[static_cast<std::size_t>(k - db)] = f;
        if (RingTraits<T>::is_zero(f)) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
        rem[static_cast<std::size_t>(k)] = RingTraits<T>::zero();
    }
    return {Poly1<T>(std::move(quo)), Poly1<T>(std::move(rem))};
}

template <class T>
Poly1<T> monic(const Poly1<T>& p) {
    if (p.is_zero()) return p;
    T inv = RingTraits<T>::one() / p.leading();
    return p * inv;
}

/// Monic greatest common divisor (exact tier).
template <class T>
Poly1<T> gcd(Poly1<T> a, Poly1<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class T>
Poly1<T> exact_quotient(const Poly1<T>& a, const Poly1<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
    return q;
}

/// p(q(τ)).
template <class T>
Poly1<T> compose(const Poly1<T>& p, const Poly1<T>& q) {
    Poly1<T> acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly1<T>::constant(*it);
    return acc;
}

template <class T>
Poly1<T> pow(const Poly1<T>& p, unsigned k) {
    Poly1<T> out = Poly1<T>::constant(RingTraits<T>::one());
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

template <class T>
Poly1<T> antiderivative(const Poly1<T>& p) {
    if (p.is_zero()) return {};
    std::vector<T> out(static_cast<std::size_t>(p.degree()) + 2, RingTraits<T>::zero());
    for (int k = 0; k <= p.degree(); ++k)
        out[static_cast<std::size_t>(k) + 1] =
            p.coefficients()[static_cast<std::size_t>(k)] / coerce<T>(Rational(static_cast<long>(k + 1)));
    return Poly1<T>(std::move(out));
}

/// Definite integral over [a, b] (exact for exact coefficients).
template <class T>
T integrate(const Poly1<T>& p, const T& a, const T& b) {
    auto prim = antiderivative(p);
    return prim(b) - prim(a);
}

/// Pseudo-remainder over an integral domain: lc(b)^(deg a − deg b + 1)·a mod b.
template <class T>
Poly1<T> pseudo_remainder(const Poly1<T>& a, const Poly1<T>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
    Poly1<T> r = a;
    const int db = b.degree();
    const T& lb = b.leading();
    int steps = std::max(a.degree() - db + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        Poly1<T> t = Poly1<T>::monomial(r.leading(), r.degree() - db);
        r = r * lb - t * b;
        --steps;
    }
    for (; steps > 0; --steps) r *= lb;
    return r;
}

/// Square-free decomposition p = c·∏ s_k^k (Yun); entry k−1 holds s_k (monic).
std::vector<Poly1<Rational>> squarefree_decomposition(const Poly1<Rational>& p);

/// Primitive integer-coefficient multiple with positive leading coefficient.
Poly1<Rational> primitive_integer(const Poly1<Rational>& p);

}  // namespace polypol
