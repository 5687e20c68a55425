#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <string>
#include <string_view>

#include "lagrel/error.hpp"

namespace lagrel {

// Arbitrary-precision rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational conj() const { return *this; }
    Rational abs() const { return Rational(::abs(v_)); }
    Rational inverse() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

// Element of Q(i): re + im * i with rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }
    std::string str() const;

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

// Exact point (c, s) on the unit circle, standing in for (cos t, sin t).
class CirclePoint {
public:
    CirclePoint() : c_(1), s_(0) {}
    CirclePoint(Rational c, Rational s);

    static CirclePoint from_tan_half(const Rational& t);

    const Rational& c() const { return c_; }
    const Rational& s() const { return s_; }
    CirclePoint inverse() const { return CirclePoint(c_, -s_); }
    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

private:
    Rational c_;
    Rational s_;
};

CirclePoint circle_from_tan_half(const Rational& t);

// Double-precision complex backend for trigonometric parameters.
class FloatComplex {
public:
    FloatComplex() = default;
    FloatComplex(double re) : v_(re, 0.0) {}
    FloatComplex(double re, double im);
    explicit FloatComplex(std::complex<double> v);

    static FloatComplex from_exact(const GaussianRational& z);

    double re() const { return v_.real(); }
    double im() const { return v_.imag(); }
    std::complex<double> value() const { return v_; }

    bool is_zero() const { return v_ == std::complex<double>(0.0, 0.0); }
    std::string str() const;

    FloatComplex conj() const { return FloatComplex(std::conj(v_)); }
    FloatComplex inverse() const;

    FloatComplex operator-() const { return FloatComplex(-v_); }
    FloatComplex& operator+=(const FloatComplex& o) { return *this = FloatComplex(v_ + o.v_); }
    FloatComplex& operator-=(const FloatComplex& o) { return *this = FloatComplex(v_ - o.v_); }
    FloatComplex& operator*=(const FloatComplex& o) { return *this = FloatComplex(v_ * o.v_); }
    FloatComplex& operator/=(const FloatComplex& o) { return *this *= o.inverse(); }

    friend FloatComplex operator+(FloatComplex a, const FloatComplex& b) { return a += b; }
    friend FloatComplex operator-(FloatComplex a, const FloatComplex& b) { return a -= b; }
    friend FloatComplex operator*(FloatComplex a, const FloatComplex& b) { return a *= b; }
    friend FloatComplex operator/(FloatComplex a, const FloatComplex& b) { return a /= b; }
    friend bool operator==(const FloatComplex& a, const FloatComplex& b) { return a.v_ == b.v_; }

private:
    std::complex<double> v_;
};

// Field capabilities consulted by the generic linear algebra.
template <class F>
struct FieldTraits {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact";
};

template <>
struct FieldTraits<FloatComplex> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";
};

using Q = GaussianRational;

}  // namespace lagrel
