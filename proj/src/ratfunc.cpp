#include "polypol/ratfunc.hpp"

namespace polypol {

RatFunc1::RatFunc1(QPoly1 num, QPoly1 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly1::constant(1);
        return;
    }
    QPoly1 g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    Rational lc = den_.leading();
    if (lc != Rational(1)) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc1::operator()(const Rational& t) const {
    Rational d = den_(t);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_(t) / d;
}

RatFunc1 RatFunc1::derivative() const {
    return RatFunc1(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc1 RatFunc1::mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const {
    const int deg = std::max(num_.degree(), den_.degree());
    QPoly1 lin_num{b, a}, lin_den{d, c};
    auto homog = [&](const QPoly1& p) {
        QPoly1 out;
        for (int k = 0; k <= p.degree(); ++k)
            out += pow(lin_num, static_cast<unsigned>(k)) * pow(lin_den, static_cast<unsigned>(deg - k)) *
                   p.coefficients()[static_cast<std::size_t>(k)];
        return out;
    };
    return RatFunc1(homog(num_), homog(den_));
}

Rational RatFunc1::residue_at(const Rational& t0) const {
    if (!den_(t0).is_zero()) return Rational(0);
    Rational dd = den_.derivative()(t0);
    if (dd.is_zero()) throw std::domain_error("residue requested at a pole of order > 1");
    return num_(t0) / dd;
}

RatFunc1 operator+(const RatFunc1& a, const RatFunc1& b) {
    return RatFunc1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc1 operator-(const RatFunc1& a, const RatFunc1& b) {
    return RatFunc1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc1 operator*(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc1 operator/(const RatFunc1& a, const RatFunc1& b) { return RatFunc1(a.num_ * b.den_, a.den_ * b.num_); }

RatFunc2::RatFunc2(QPoly2 num, QPoly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly2(Rational(1));
        return;
    }
    QPoly2 g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
    }
    Rational inv = Rational(1) / den_.first_term().second;
    num_ *= inv;
    den_ *= inv;
}

RatFunc2 RatFunc2::from_coprime(QPoly2 num, QPoly2 den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RatFunc2 r;
    Rational inv = Rational(1) / den.first_term().second;
    r.num_ = num * inv;
    r.den_ = den * inv;
    if (r.num_.is_zero()) r.den_ = QPoly2(Rational(1));
    return r;
}

Rational RatFunc2::operator()(const Rational& u, const Rational& v) const {
    Rational d = den_(u, v);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_(u, v) / d;
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) { return RatFunc2(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) { return RatFunc2(a.num_ * b.den_, a.den_ * b.num_); }

}  // namespace polypol
