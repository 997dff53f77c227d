#include "hvs/models.hpp"

#include <algorithm>
#include <cctype>

namespace hvs {

// ---------------------------------------------------------------------------
// Vector

Vector Vector::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 3 || s.front() != '(' || s.back() != ')')
        throw SyntaxError("vector must look like '(p/q, ...)': '" + std::string(text) + "'");
    std::vector<Scalar> coords;
    std::size_t start = 1;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::size_t end = comma == std::string::npos ? s.size() - 1 : comma;
        coords.push_back(Scalar::parse(std::string_view(s).substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Vector(std::move(coords));
}

bool Vector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool Vector::in_field(FieldTag f) const
{
    return std::all_of(coords_.begin(), coords_.end(), [f](const Scalar& c) { return c.in_field(f); });
}

Vector Vector::operator-() const
{
    Vector out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

Vector& Vector::operator+=(const Vector& o)
{
    if (o.dim() != dim()) throw ShapeError("vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    if (o.dim() != dim()) throw ShapeError("vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Vector operator*(const Scalar& a, const Vector& v)
{
    Vector out = v;
    for (auto& c : out.coords_) c = a * c;
    return out;
}

std::strong_ordering lex_compare(const Vector& a, const Vector& b)
{
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = lex_compare(a[i], b[i]); c != 0) return c;
    return a.dim() <=> b.dim();
}

std::string Vector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        out += coords_[i].to_string();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// HyperSet

HyperSet HyperSet::finite(std::vector<Vector> elements)
{
    if (elements.empty()) throw ShapeError("a hyperset must be nonempty");
    const std::size_t dim = elements.front().dim();
    std::vector<Vector> unique;
    unique.reserve(elements.size());
    for (auto& v : elements) {
        if (v.dim() != dim) throw ShapeError("mixed dimensions in finite set");
        if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(std::move(v));
    }
    return HyperSet(FiniteSet{std::move(unique)});
}

HyperSet HyperSet::ray(Vector base, Rational ratio)
{
    if (ratio.sign() <= 0 || ratio == Rational(1))
        throw ShapeError("ray ratio must be positive and different from 1, got " + ratio.to_string());
    if (base.is_zero()) return singleton(std::move(base));
    return HyperSet(GeometricRay{std::move(base), std::move(ratio)});
}

HyperSet HyperSet::sign_pair(Vector base)
{
    if (base.is_zero()) return singleton(std::move(base));
    return HyperSet(SignPair{std::move(base)});
}

std::size_t HyperSet::dim() const
{
    return std::visit(
        [](const auto& s) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, FiniteSet>)
                return s.elements.front().dim();
            else
                return s.base.dim();
        },
        shape_);
}

std::optional<unsigned long> exact_log(const Rational& t, const Rational& ratio)
{
    if (t.sign() <= 0) return std::nullopt;
    const Rational one(1);
    if (t == one) return 0UL;
    const bool growing = ratio > one;
    if (growing != (t > one)) return std::nullopt;
    Rational p = ratio;
    unsigned long k = 1;
    while (growing ? p < t : p > t) {
        p *= ratio;
        ++k;
    }
    if (p == t) return k;
    return std::nullopt;
}

namespace {

bool ray_contains(const GeometricRay& r, const Vector& v)
{
    std::size_t pivot = 0;
    while (r.base[pivot].is_zero()) ++pivot;  // base != 0 by construction
    if (v[pivot].is_zero()) return false;
    const Scalar t = v[pivot] / r.base[pivot];
    if (!t.is_real()) return false;
    if (!exact_log(t.re(), r.ratio)) return false;
    return v == t * r.base;
}

}  // namespace

bool HyperSet::contains(const Vector& v) const
{
    if (v.dim() != dim()) throw ShapeError("membership test with mismatched dimension");
    return std::visit(
        [&v](const auto& s) -> bool {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FiniteSet>)
                return std::find(s.elements.begin(), s.elements.end(), v) != s.elements.end();
            else if constexpr (std::is_same_v<S, SignPair>)
                return v == s.base || v == -s.base;
            else
                return ray_contains(s, v);
        },
        shape_);
}

std::vector<Vector> HyperSet::enumerate(std::size_t depth) const
{
    return std::visit(
        [depth](const auto& s) -> std::vector<Vector> {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FiniteSet>) {
                return s.elements;
            } else if constexpr (std::is_same_v<S, SignPair>) {
                return {s.base, -s.base};
            } else {
                std::vector<Vector> out;
                out.reserve(depth);
                Scalar scale(1);
                for (std::size_t k = 0; k < depth; ++k) {
                    out.push_back(scale * s.base);
                    scale *= Scalar(s.ratio);
                }
                return out;
            }
        },
        shape_);
}

HyperSet HyperSet::negated() const
{
    return std::visit(
        [](const auto& s) -> HyperSet {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FiniteSet>) {
                std::vector<Vector> out;
                for (const auto& v : s.elements) out.push_back(-v);
                return HyperSet::finite(std::move(out));
            } else if constexpr (std::is_same_v<S, SignPair>) {
                return HyperSet::sign_pair(-s.base);
            } else {
                return HyperSet::ray(-s.base, s.ratio);
            }
        },
        shape_);
}

bool set_equal(const HyperSet& a, const HyperSet& b)
{
    if (a.dim() != b.dim()) return false;
    const auto* ra = std::get_if<GeometricRay>(&a.shape_);
    const auto* rb = std::get_if<GeometricRay>(&b.shape_);
    // A ray is infinite, and is determined by its first element and its ratio.
    if (ra || rb) return ra && rb && ra->base == rb->base && ra->ratio == rb->ratio;
    const auto ea = a.enumerate(1);
    const auto eb = b.enumerate(1);
    if (ea.size() != eb.size()) return false;
    return std::all_of(ea.begin(), ea.end(), [&b](const Vector& v) { return b.contains(v); });
}

std::string HyperSet::to_string() const
{
    return std::visit(
        [](const auto& s) -> std::string {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, FiniteSet>) {
                std::string out = "{";
                for (std::size_t i = 0; i < s.elements.size(); ++i) {
                    if (i) out += ", ";
                    out += s.elements[i].to_string();
                }
                return out + "}";
            } else if constexpr (std::is_same_v<S, SignPair>) {
                return "{+-" + s.base.to_string() + "}";
            } else {
                return "{" + s.base.to_string() + " * (" + s.ratio.to_string() + ")^k : k >= 0}";
            }
        },
        shape_);
}

std::optional<Vector> intersect_nonempty(const HyperSet& s1, const HyperSet& s2, std::size_t depth)
{
    const auto* r1 = std::get_if<GeometricRay>(&s1.shape());
    const auto* r2 = std::get_if<GeometricRay>(&s2.shape());
    if (r1 && r2 && r1->ratio == r2->ratio) {
        // base1 * r^k = base2 * r^j has a solution iff one base lies on the other ray.
        if (s1.contains(r2->base)) return r2->base;
        if (s2.contains(r1->base)) return r1->base;
        return std::nullopt;
    }
    for (const auto& v : s1.enumerate(depth))
        if (s2.contains(v)) return v;
    for (const auto& v : s2.enumerate(depth))
        if (s1.contains(v)) return v;
    return std::nullopt;
}

HyperSet sumset(const HyperSet& s1, const HyperSet& s2, std::size_t depth)
{
    const auto e1 = s1.enumerate(depth);
    const auto e2 = s2.enumerate(depth);
    std::vector<Vector> sums;
    sums.reserve(e1.size() * e2.size());
    for (const auto& u : e1)
        for (const auto& v : e2) sums.push_back(u + v);
    return HyperSet::finite(std::move(sums));
}

// ---------------------------------------------------------------------------
// Models

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::Trivial: return "trivial";
    case Family::ZeroAugmented: return "zero_augmented";
    case Family::Geometric: return "geometric";
    case Family::Sign: return "sign";
    }
    return "?";
}

void ModelSpec::validate() const
{
    if (dim == 0) throw ShapeError("dimension must be at least 1");
    if (family == Family::Sign && field != FieldTag::RealRationals)
        throw ShapeError("sign requires field Q");
    if (family == Family::Geometric && (ratio.sign() <= 0 || ratio == Rational(1)))
        throw ShapeError("geometric ratio must be positive and different from 1");
}

std::string ModelSpec::family_string() const
{
    std::string out(to_string(family));
    if (family == Family::Geometric) out += "(" + ratio.to_string() + ")";
    return out;
}

std::string ModelSpec::describe() const
{
    return family_string() + " over " + std::string(to_string(field)) + "^" + std::to_string(dim);
}

void require_compatible(const ModelSpec& model, const Vector& x)
{
    if (x.dim() != model.dim)
        throw ShapeError("vector " + x.to_string() + " has dimension " + std::to_string(x.dim()) +
                         ", model expects " + std::to_string(model.dim));
    if (!x.in_field(model.field))
        throw ShapeError("vector " + x.to_string() + " is not over field " + std::string(to_string(model.field)));
}

void require_compatible(const ModelSpec& model, const Scalar& a)
{
    if (!a.in_field(model.field))
        throw ShapeError("scalar " + a.to_string() + " is not in field " + std::string(to_string(model.field)));
}

HyperSet product(const ModelSpec& model, const Scalar& a, const Vector& x)
{
    require_compatible(model, a);
    require_compatible(model, x);
    if (a.is_zero() || x.is_zero()) return HyperSet::singleton(Vector::zero(model.dim));
    Vector ax = a * x;
    switch (model.family) {
    case Family::Trivial: return HyperSet::singleton(std::move(ax));
    case Family::ZeroAugmented: return HyperSet::finite({std::move(ax), Vector::zero(model.dim)});
    case Family::Geometric: return HyperSet::ray(std::move(ax), model.ratio);
    case Family::Sign: return HyperSet::sign_pair(std::move(ax));
    }
    throw ShapeError("unknown family");
}

HyperSet product_of_set(const ModelSpec& model, const Scalar& a, const HyperSet& s)
{
    if (s.dim() != model.dim) throw ShapeError("set dimension does not match model");
    const Vector zero = Vector::zero(model.dim);

    if (const auto* r = std::get_if<GeometricRay>(&s.shape())) {
        if (model.family != Family::Geometric || r->ratio != model.ratio)
            throw ShapeError("cannot form the product of a ray under " + model.family_string());
        if (a.is_zero()) return HyperSet::singleton(zero);
        // Exponents {k + j : k, j >= 0} cover every m >= 0, so the union is one ray.
        return product(model, a, r->base);
    }

    const auto points = s.enumerate(1);
    if (model.family != Family::Geometric) {
        std::vector<Vector> out;
        for (const auto& y : points)
            for (auto& v : product(model, a, y).enumerate(1)) out.push_back(std::move(v));
        return HyperSet::finite(std::move(out));
    }

    // Geometric over a finite set: the union must collapse onto one ray or {0}.
    std::vector<HyperSet> pieces;
    for (const auto& y : points) pieces.push_back(product(model, a, y));
    const bool all_zero = std::all_of(pieces.begin(), pieces.end(), [](const HyperSet& p) { return p.is_finite(); });
    if (all_zero) return HyperSet::singleton(zero);
    for (const auto& candidate : pieces) {
        if (candidate.is_finite()) continue;
        const bool covers = std::all_of(pieces.begin(), pieces.end(), [&](const HyperSet& p) {
            const auto* pr = std::get_if<GeometricRay>(&p.shape());
            return pr && candidate.contains(pr->base);
        });
        if (covers) return candidate;
    }
    throw ShapeError("union " + s.to_string() + " under " + model.family_string() + " is not a single ray");
}

std::vector<ModelSpec> catalog_models(std::size_t dim)
{
    const auto Q = FieldTag::RealRationals;
    return {
        ModelSpec{Q, dim, Family::Trivial, Rational(1, 2)},
        ModelSpec{Q, dim, Family::ZeroAugmented, Rational(1, 2)},
        ModelSpec{Q, dim, Family::Geometric, Rational(1, 2)},
        ModelSpec{Q, dim, Family::Geometric, Rational(2)},
        ModelSpec{Q, dim, Family::Sign, Rational(1, 2)},
    };
}

}  // namespace hvs
