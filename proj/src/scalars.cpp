#include "hvs/scalars.hpp"

#include <cctype>
#include <optional>

namespace hvs {

std::string_view to_string(FieldTag f)
{
    return f == FieldTag::RealRationals ? "Q" : "Qi";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v))
{
    v_.canonicalize();
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Drops whitespace, except that it may not split a number ("1 2" is not 12).
std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    bool gap = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            gap = true;
            continue;
        }
        if (gap && !out.empty() && is_digit(out.back()) && is_digit(c))
            throw SyntaxError("whitespace inside a number in '" + std::string(text) + "'");
        gap = false;
        out.push_back(c);
    }
    return out;
}

// Reads "digits[/digits]" at pos; returns nullopt if no digits are present.
std::optional<Rational> read_unsigned_rational(const std::string& s, std::size_t& pos)
{
    const std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == start) return std::nullopt;
    mpz_class num(s.substr(start, pos - start), 10);
    mpz_class den = 1;
    if (pos < s.size() && s[pos] == '/') {
        const std::size_t dstart = ++pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == dstart) throw SyntaxError("missing denominator in '" + s + "'");
        den = mpz_class(s.substr(dstart, pos - dstart), 10);
        if (den == 0) throw DomainError("rational with zero denominator");
    }
    return Rational(mpq_class(num, den));
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
    auto r = read_unsigned_rational(s, pos);
    if (!r || pos != s.size()) throw SyntaxError("malformed rational '" + std::string(text) + "'");
    return negative ? -*r : *r;
}

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::parse(std::string_view text)
{
    const std::string s = strip_spaces(text);
    if (s.empty()) throw SyntaxError("empty scalar");

    std::optional<Rational> re;
    std::optional<Rational> im;
    std::size_t pos = 0;
    for (int term = 0; pos < s.size(); ++term) {
        if (term >= 2) throw SyntaxError("too many terms in scalar '" + s + "'");
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos++] == '-';
        } else if (term > 0) {
            throw SyntaxError("expected '+' or '-' between terms in '" + s + "'");
        }
        auto coeff = read_unsigned_rational(s, pos);
        bool imaginary = false;
        if (pos < s.size() && s[pos] == '*') {
            if (!coeff) throw SyntaxError("dangling '*' in '" + s + "'");
            ++pos;
            if (pos >= s.size() || s[pos] != 'i') throw SyntaxError("expected 'i' after '*' in '" + s + "'");
        }
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            imaginary = true;
            if (!coeff) coeff = Rational(1);
        }
        if (!coeff) throw SyntaxError("malformed scalar '" + s + "'");
        Rational value = negative ? -*coeff : *coeff;
        auto& slot = imaginary ? im : re;
        if (slot) throw SyntaxError("repeated " + std::string(imaginary ? "imaginary" : "real") + " part in '" + s + "'");
        slot = std::move(value);
    }
    return {re.value_or(Rational(0)), im.value_or(Rational(0))};
}

const Rational& GaussianRational::as_real() const
{
    if (!is_real()) throw DomainError("scalar " + to_string() + " is not real");
    return re_;
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) throw DomainError("inverse of zero");
    const Rational n = abs2();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering real_compare(const GaussianRational& a, const GaussianRational& b)
{
    return a.as_real() <=> b.as_real();
}

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b)
{
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
}

std::string GaussianRational::to_string() const
{
    if (is_real()) return re_.to_string();
    const Rational mag = im_.abs();
    std::string imag = mag == Rational(1) ? "i" : mag.to_string() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

// ---------------------------------------------------------------------------

bool leq_sqrt_product(const Rational& c, const Rational& s1, const Rational& s2)
{
    if (s1.sign() < 0 || s2.sign() < 0) throw DomainError("square root of a negative product");
    if (c.sign() <= 0) return true;
    return c * c <= s1 * s2;
}

}  // namespace hvs
