#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace rootgrade {

using Rational = mpq_class;

/// Element of Q(i): exact Gaussian rational arithmetic.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar &operator+=(const Scalar &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar &operator-=(const Scalar &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar &operator*=(const Scalar &o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Scalar &operator/=(const Scalar &o) {
        if (o.is_zero())
            throw std::domain_error("Scalar: division by zero");
        Rational n = o.re * o.re + o.im * o.im;
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
    friend bool operator<(const Scalar &a, const Scalar &b) {
        if (a.re != b.re)
            return a.re < b.re;
        return a.im < b.im;
    }

    Scalar inverse() const { return Scalar(Rational(1)) / *this; }

    /// Canonical text form: "p/q", "r/s i", or "p/q+r/s i" ("-..." as needed).
    std::string str() const;
};

/// Parses "p/q", "p/q+r/s i", "p/q-r/s i", "i", "-i", "r/s i".
Scalar parse_scalar(const std::string &s);

Rational parse_rational(const std::string &s);

} // namespace rootgrade
