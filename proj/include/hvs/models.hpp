#pragma once

// Concrete weak hypervector spaces over Q^n and Q[i]^n with a set-valued
// scalar product, and the finitely-describable sets that product returns.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hvs/scalars.hpp"

namespace hvs {

/// Dimension or field mismatch between a model and its operands, or a
/// set shape an operation cannot represent exactly.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
    Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

    static Vector zero(std::size_t dim) { return Vector(std::vector<Scalar>(dim)); }
    /// Parses "(p/q, p/q, ...)"; whitespace-insensitive.
    static Vector parse(std::string_view text);

    std::size_t dim() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const;
    bool in_field(FieldTag f) const;

    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& a, const Vector& v);

    friend bool operator==(const Vector&, const Vector&) = default;
    /// Lexicographic order on coordinates; canonicalizes finite sets.
    friend std::strong_ordering lex_compare(const Vector& a, const Vector& b);

    /// "(3, 6)"
    std::string to_string() const;

private:
    std::vector<Scalar> coords_;
};

struct VectorLess {
    bool operator()(const Vector& a, const Vector& b) const { return lex_compare(a, b) < 0; }
};

// ---------------------------------------------------------------------------
// HyperSet

/// A nonempty finite set. Elements are deduplicated and kept in
/// insertion order.
struct FiniteSet {
    std::vector<Vector> elements;
};

/// { base * ratio^k : k >= 0 } with base != 0, ratio > 0, ratio != 1.
struct GeometricRay {
    Vector base;
    Rational ratio;
};

/// { base, -base } with base != 0.
struct SignPair {
    Vector base;
};

class HyperSet {
public:
    using Shape = std::variant<FiniteSet, GeometricRay, SignPair>;

    /// Constructors normalize: duplicates are dropped, a zero-based ray or
    /// sign pair collapses to Finite({0}).
    static HyperSet finite(std::vector<Vector> elements);
    static HyperSet singleton(Vector v) { return finite({std::move(v)}); }
    static HyperSet ray(Vector base, Rational ratio);
    static HyperSet sign_pair(Vector base);

    const Shape& shape() const { return shape_; }
    bool is_finite() const { return !std::holds_alternative<GeometricRay>(shape_); }
    std::size_t dim() const;

    /// Exact membership.
    bool contains(const Vector& v) const;

    /// Finite/SignPair: every element. GeometricRay: base * ratio^k, k < depth.
    std::vector<Vector> enumerate(std::size_t depth) const;

    /// Elementwise negation image.
    HyperSet negated() const;

    /// Exact set equality.
    friend bool set_equal(const HyperSet& a, const HyperSet& b);

    std::string to_string() const;

private:
    explicit HyperSet(Shape s) : shape_(std::move(s)) {}
    Shape shape_;
};

/// If t = ratio^k for some integer k >= 0, returns k.
std::optional<unsigned long> exact_log(const Rational& t, const Rational& ratio);

/// Some v in both sets, searched over depth-bounded enumerations of each
/// side (exact closed form when both are rays with equal ratio). A miss
/// means "not found up to depth", not a proof of emptiness.
std::optional<Vector> intersect_nonempty(const HyperSet& s1, const HyperSet& s2, std::size_t depth);

/// Depth-bounded elementwise sumset {u + v}.
HyperSet sumset(const HyperSet& s1, const HyperSet& s2, std::size_t depth);

// ---------------------------------------------------------------------------
// Models

enum class Family { Trivial, ZeroAugmented, Geometric, Sign };

std::string_view to_string(Family f);

struct ModelSpec {
    FieldTag field = FieldTag::RealRationals;
    std::size_t dim = 2;
    Family family = Family::Trivial;
    /// Only meaningful for Family::Geometric.
    Rational ratio = Rational(1, 2);

    /// Throws ShapeError on an inadmissible combination (sign over Q[i],
    /// geometric ratio <= 0 or == 1, dim == 0).
    void validate() const;

    /// "geometric(1/2)" etc., the DSL spelling.
    std::string family_string() const;
    /// "geometric(1/2) over Q^2"
    std::string describe() const;

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// a o x, normalized. 0 o x and a o 0 are {0} in every family.
HyperSet product(const ModelSpec& model, const Scalar& a, const Vector& x);

/// a o S = union of a o y over y in S, in exact closed form.
HyperSet product_of_set(const ModelSpec& model, const Scalar& a, const HyperSet& s);

/// Throws ShapeError unless x has model.dim coordinates in model.field.
void require_compatible(const ModelSpec& model, const Vector& x);
void require_compatible(const ModelSpec& model, const Scalar& a);

/// The five built-in catalog models, all over Q^dim.
std::vector<ModelSpec> catalog_models(std::size_t dim = 2);

}  // namespace hvs
