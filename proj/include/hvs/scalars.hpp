#pragma once

// Exact field arithmetic over Q and Q[i].

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hvs {

/// Raised for operations outside a field's domain (division by zero,
/// ordering a non-real scalar, square root of a negative quantity).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a textual scalar or vector cannot be parsed.
class SyntaxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FieldTag { RealRationals, GaussianRationals };

std::string_view to_string(FieldTag f);

/// Arbitrary-precision rational in canonical form (den > 0, gcd = 1).
class Rational {
public:
    Rational() = default;
    Rational(long num) : v_(num) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p" when the value is an integer, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

/// Element of Q[i]. Real scalars are the im == 0 subset, so one type
/// serves both fields and the model's FieldTag decides what is admissible.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Accepts "p/q", "p/q+r/s*i", "r/s*i", "i", "-i", "1+i" (whitespace-insensitive).
    static GaussianRational parse(std::string_view text);

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool in_field(FieldTag f) const { return f == FieldTag::GaussianRationals || is_real(); }

    /// The real part, for scalars known to be real. Throws DomainError otherwise.
    const Rational& as_real() const;

    GaussianRational conjugate() const { return {re_, -im_}; }
    /// z * conj(z), always a nonnegative rational.
    Rational abs2() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    /// Order on real scalars only; throws DomainError if either has im != 0.
    friend std::strong_ordering real_compare(const GaussianRational& a, const GaussianRational& b);
    /// Lexicographic (re, im) order. Not a field order; used to canonicalize sets.
    friend std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

using Scalar = GaussianRational;

/// Decides c <= sqrt(s1 * s2) exactly, without forming an irrational root.
/// Throws DomainError when s1 or s2 is negative.
bool leq_sqrt_product(const Rational& c, const Rational& s1, const Rational& s2);

}  // namespace hvs
