#include "lagrel/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace lagrel {

std::string_view error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BackendMismatch: return "BackendMismatch";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::EmptyRelation: return "EmptyRelation";
        case ErrorKind::NotAState: return "NotAState";
        case ErrorKind::NotLagrangian: return "NotLagrangian";
        case ErrorKind::InternalDisagreement: return "InternalDisagreement";
        case ErrorKind::NotOnCircle: return "NotOnCircle";
        case ErrorKind::NotAQuantumCovariance: return "NotAQuantumCovariance";
        case ErrorKind::NotSymplectic: return "NotSymplectic";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::NotQuasiReal: return "NotQuasiReal";
        case ErrorKind::UnknownKind: return "UnknownKind";
        case ErrorKind::IllFormedDiagram: return "IllFormedDiagram";
        case ErrorKind::SideConditionViolated: return "SideConditionViolated";
        case ErrorKind::NotInFragment: return "NotInFragment";
        case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::NegativeEpsilon: return "NegativeEpsilon";
        case ErrorKind::ZeroSqueeze: return "ZeroSqueeze";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

std::string trimmed(std::string_view text) {
    std::string out;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(numerator, denominator);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s = trimmed(text);
    std::string body = s;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(ErrorKind::ParseError, "malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator '" + s + "'");
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        if (!im_.is_zero()) im_ *= o.re_;
        return *this;
    }
    if (im_.is_zero()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (im_.is_zero()) return GaussianRational(re_.inverse());
    Rational n = norm2();
    return GaussianRational(re_ / n, -im_ / n);
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string mag;
    Rational a = im_.abs();
    if (!(a == Rational(1))) mag = a.str();
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + mag + "i";
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + mag + "i";
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s = trimmed(text);
    if (s.empty()) fail(ErrorKind::ParseError, "empty scalar");
    if (s.back() != 'i') return GaussianRational(Rational::parse(s));
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_text = split == std::string::npos ? body : body.substr(split);
    Rational im;
    if (im_text.empty() || im_text == "+") im = Rational(1);
    else if (im_text == "-") im = Rational(-1);
    else im = Rational::parse(im_text);
    Rational re = re_text.empty() ? Rational(0) : Rational::parse(re_text);
    return GaussianRational(re, im);
}

CirclePoint::CirclePoint(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
    if (!(c_ * c_ + s_ * s_ == Rational(1)))
        fail(ErrorKind::NotOnCircle, "(" + c_.str() + ", " + s_.str() + ") is not on the unit circle");
}

CirclePoint CirclePoint::from_tan_half(const Rational& t) {
    Rational d = Rational(1) + t * t;
    return CirclePoint((Rational(1) - t * t) / d, Rational(2) * t / d);
}

CirclePoint circle_from_tan_half(const Rational& t) { return CirclePoint::from_tan_half(t); }

FloatComplex::FloatComplex(double re, double im) : FloatComplex(std::complex<double>(re, im)) {}

FloatComplex::FloatComplex(std::complex<double> v) : v_(v) {
    if (!std::isfinite(v_.real()) || !std::isfinite(v_.imag()))
        fail(ErrorKind::DivisionByZero, "non-finite float result");
}

FloatComplex FloatComplex::from_exact(const GaussianRational& z) {
    return FloatComplex(z.re().to_double(), z.im().to_double());
}

FloatComplex FloatComplex::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return FloatComplex(1.0 / v_);
}

std::string FloatComplex::str() const {
    std::ostringstream out;
    out.precision(17);
    out << v_.real();
    if (v_.imag() != 0.0) out << (v_.imag() < 0 ? "-" : "+") << std::abs(v_.imag()) << "i";
    return out.str();
}

}  // namespace lagrel
