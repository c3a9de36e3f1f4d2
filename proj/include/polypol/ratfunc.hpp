#pragma once

#include <complex>

#include "polypol/poly2.hpp"

namespace polypol {

/// Reduced univariate rational function with monic denominator.
class RatFunc1 {
public:
    RatFunc1() : num_(), den_(QPoly1::constant(1)) {}
    RatFunc1(QPoly1 num) : num_(std::move(num)), den_(QPoly1::constant(1)) {}
    /// gcd-reduces; throws std::domain_error on a zero denominator.
    RatFunc1(QPoly1 num, QPoly1 den);

    const QPoly1& num() const { return num_; }
    const QPoly1& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

    Rational operator()(const Rational& t) const;
    double eval(double t) const { return num_.eval_as<double>(t) / den_.eval_as<double>(t); }
    std::complex<double> eval(std::complex<double> t) const {
        return num_.eval_as<std::complex<double>>(t) / den_.eval_as<std::complex<double>>(t);
    }

    RatFunc1 derivative() const;
    /// Substitute τ → (a τ + b)/(c τ + d).
    RatFunc1 mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;

    /// Residue at a simple pole t0 (exact).
    Rational residue_at(const Rational& t0) const;

    friend RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b);
    friend RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b);
    friend RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b);
    friend RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b);
    friend bool operator==(const RatFunc1& a, const RatFunc1& b) = default;

private:
    QPoly1 num_;
    QPoly1 den_;
};

/// gcd-reduced bivariate rational function. Canonical scaling: the
/// denominator's first graded-order term has coefficient 1.
class RatFunc2 {
public:
    RatFunc2() : num_(), den_(Rational(1)) {}
    RatFunc2(QPoly2 num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc2(QPoly2 num, QPoly2 den);
    /// Caller guarantees num and den are coprime; only the scaling is normalized.
    static RatFunc2 from_coprime(QPoly2 num, QPoly2 den);

    const QPoly2& num() const { return num_; }
    const QPoly2& den() const { return den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    double eval(double u, double v) const {
        return num_.eval_as<double>(u, v) / den_.eval_as<double>(u, v);
    }
    Rational operator()(const Rational& u, const Rational& v) const;

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
    friend bool operator==(const RatFunc2& a, const RatFunc2& b) = default;

private:
    QPoly2 num_;
    QPoly2 den_;
};

}  // namespace polypol
