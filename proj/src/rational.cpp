#include "polypol/rational.hpp"

#include <cmath>
#include <cstdio>

namespace polypol {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("cannot convert non-finite double to rational");
    return Rational(mpq_class(v));
}

namespace {

mpz_class parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal");
    for (std::size_t k = start; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
}

Rational parse_decimal(std::string_view s) {
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        exponent = parse_integer(s.substr(epos + 1)).get_si();
        s = s.substr(0, epos);
    }
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exponent -= static_cast<long>(s.size() - dot - 1);
    } else {
        digits = std::string(s);
    }
    if (digits.empty()) throw std::invalid_argument("malformed decimal literal");
    mpz_class mant = parse_integer(digits);
    if (negative) mant = -mant;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    return exponent >= 0 ? Rational(mant * scale, mpz_class(1)) : Rational(mant, scale);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational literal with zero denominator");
        return Rational(num, den);
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    return Rational(parse_integer(text), mpz_class(1));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned k) {
    Rational out(1);
    Rational base = r;
    while (k) {
        if (k & 1u) out *= base;
        base *= base;
        k >>= 1u;
    }
    return out;
}

// Stern–Brocot descent on the continued fractions of both endpoints.
Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
    Rational lo = lo_in, hi = hi_in;
    if (hi < lo) std::swap(lo, hi);
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_between(-hi, -lo);

    // 0 < lo <= hi
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.raw().get_num_mpz_t(), lo.raw().get_den_mpz_t());
    Rational fl_r(fl, mpz_class(1));
    if (fl_r == lo) return lo;
    if (fl_r + 1 <= hi) return fl_r + 1;
    // lo and hi share integer part; recurse on reciprocals of fractional parts
    Rational inner = simplest_between(Rational(1) / (hi - fl_r), Rational(1) / (lo - fl_r));
    return fl_r + Rational(1) / inner;
}

Rational rationalize(double v, double tol) {
    return simplest_between(Rational::from_double(v - tol), Rational::from_double(v + tol));
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n.is_zero()) throw std::domain_error("gaussian rational division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string Number::to_string() const { return exact ? exact->to_string() : format_double(value); }

}  // namespace polypol
