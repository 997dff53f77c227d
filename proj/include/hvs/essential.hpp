#pragma once

// Essential points e of a o x (e in a o x with x in a^-1 o e; e = 0 when
// a = 0) and the normality checks built on them.

#include <string>
#include <vector>

#include "hvs/checker.hpp"
#include "hvs/models.hpp"

namespace hvs {

struct EssentialSet {
    std::vector<Vector> points;
    /// True when every candidate in a o x was examined: a finite product,
    /// a = 0, or a family closed form.
    bool complete = true;

    bool singleton() const { return points.size() == 1; }
    bool contains(const Vector& v) const;
    /// "{(3, 6)} (complete)"
    std::string to_string() const;
    std::string points_string() const;
};

enum class EssentialSolver {
    /// Per-family closed form where one exists, exhaustive otherwise.
    closed_form,
    /// Filter the depth-bounded enumeration of a o x.
    enumeration,
};

EssentialSet essential_points(const ModelSpec& model, const Scalar& a, const Vector& x, std::size_t depth,
                              EssentialSolver solver = EssentialSolver::closed_form);

/// Direct test of both defining conditions for a single candidate e.
bool is_essential(const ModelSpec& model, const Scalar& a, const Vector& x, const Vector& e);

/// Items: unit_essential, essential_absorption, essential_negation,
/// essential_preimage, normal_singleton (the last is gated on strong normality).
std::vector<ItemCheck> lemma_basic_items(const ModelSpec& model, std::size_t depth);
/// Items: scalar_additivity, vector_additivity (intersection reading).
std::vector<ItemCheck> weak_normal_items(const ModelSpec& model, std::size_t depth);
/// Items: scalar_additivity, vector_additivity (every-choice equality reading).
std::vector<ItemCheck> strong_normal_items(const ModelSpec& model, std::size_t depth);

CheckReport check_lemma_basic(const ModelSpec& model, const SampleConfig& cfg);
CheckReport check_weak_normal(const ModelSpec& model, const SampleConfig& cfg);
CheckReport check_strong_normal(const ModelSpec& model, const SampleConfig& cfg);

/// "consistent" when the two readings agree, "readings disagree" otherwise.
std::string normality_verdict(const CheckReport& weak, const CheckReport& strong);

/// One item, "equivalence": fails when the weak and strong readings
/// disagree on the same samples, carrying the first witness of the failing side.
CheckReport check_normal_equivalence(const ModelSpec& model, const SampleConfig& cfg);

}  // namespace hvs
