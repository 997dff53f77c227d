#pragma once

// Inner products on hypervector spaces, exact suprema over set-valued
// products, the derived (squared) norm, and the check suites for them.

#include <optional>
#include <string>
#include <vector>

#include "hvs/checker.hpp"
#include "hvs/models.hpp"

namespace hvs {

struct InnerProductSpec {
    enum class Kind { Dot, WeightedDot };
    Kind kind = Kind::Dot;
    /// WeightedDot only: one positive weight per coordinate.
    std::vector<Rational> weights;

    static InnerProductSpec dot() { return {}; }
    static InnerProductSpec weighted(std::vector<Rational> w) { return {Kind::WeightedDot, std::move(w)}; }

    /// Throws ShapeError if weights are not positive or their count differs from dim.
    void validate(std::size_t dim) const;
    /// "dot" or "weighted_dot(2, 3)".
    std::string to_string() const;

    friend bool operator==(const InnerProductSpec&, const InnerProductSpec&) = default;
};

/// sum_i w_i x_i conj(y_i), with w_i = 1 for Dot.
Scalar pairing(const InnerProductSpec& ip, const Vector& x, const Vector& y);

/// The squared norm f(x)^2 = (x, x).
struct NormSq {
    Rational value;
};

NormSq norm_sq(const InnerProductSpec& ip, const Vector& x);

/// Exact supremum of a real-valued function over a hyperset.
struct SupResult {
    bool bounded = true;
    Rational value;
    bool attained = false;
    std::optional<Vector> witness;

    static SupResult unbounded() { return {false, Rational(0), false, std::nullopt}; }
    /// "0 (attained at (0, 0))", "0 (not attained)", "+inf (unbounded)".
    std::string to_string() const;
};

/// sup { (z, y) : z in a o x } over the real field. Throws DomainError on Q[i].
SupResult sup_pairing(const ModelSpec& model, const InnerProductSpec& ip, const Scalar& a, const Vector& x,
                      const Vector& y);

/// sup { (u, u) : u in a o x }.
SupResult sup_norm_sq(const ModelSpec& model, const InnerProductSpec& ip, const Scalar& a, const Vector& x);

/// Items: positivity, definiteness, additivity, symmetry, sup_homogeneity,
/// sup_at_essential (the last is gated on the first five passing).
std::vector<ItemCheck> real_ip_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth);
/// Items: positivity, definiteness, additivity, conjugate_symmetry,
/// essential_homogeneity, unit_contraction.
std::vector<ItemCheck> hip_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth);
/// Items: zero_pairing, negation_pairing, conjugate_homogeneity, product_bound.
std::vector<ItemCheck> lemma_34_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth);
/// Items: definiteness, cauchy_schwarz, triangle, essential_scaling, sup_scaling.
std::vector<ItemCheck> norm_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth);

CheckReport check_real_ip_axioms(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg);
CheckReport check_hip_axioms(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg);
/// Vacuous unless check_hip_axioms passes.
CheckReport check_lemma_34(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg);
/// If check_hip_axioms passes, essential sets must be singletons and
/// check_strong_normal must pass; anything else is a contradiction.
CheckReport check_theorem_normal(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg);
/// Vacuous unless check_hip_axioms passes; adds the derived norm_axioms item.
CheckReport check_norm_props(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg);

}  // namespace hvs
