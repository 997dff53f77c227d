#pragma once

// Deterministic sampling, per-tuple outcomes, the serial and OpenMP
// evaluation kernels, and the report types every check suite produces.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hvs/models.hpp"
#include "hvs/scalars.hpp"

namespace hvs {

enum class Exec { serial, parallel };

struct SampleConfig {
    std::uint64_t seed = 42;
    std::size_t samples = 500;
    /// Rational numerators in [-height, height], denominators in [1, height].
    long height = 10;
    /// Enumeration depth for infinite hypersets.
    std::size_t depth = 8;
    /// Does not affect results, only how tuples are scheduled.
    Exec exec = Exec::parallel;
};

/// One sampled tuple. Suites use whichever variables they need.
struct Sample {
    Scalar a;
    Scalar b;
    Vector x;
    Vector y;
    Vector z;
};

/// Generated with std::mt19937_64 seeded by cfg.seed; the engine is fully
/// specified by the standard, and values are mapped to ranges with plain
/// modular reduction, so streams are identical across platforms. Each
/// tuple consumes a fixed number of draws, so a shorter stream is a prefix
/// of a longer one. The first tuples force the degenerate cases: (a, b)
/// runs over {0, 1, -1}^2 for tuples 0..8, and tuples 0..11 cycle through
/// x = 0, y = 0, y = x, y = -x.
std::vector<Sample> sample_stream(const SampleConfig& cfg, FieldTag field, std::size_t dim);

/// Exact variable assignment and the violated relation, printed.
struct Witness {
    std::vector<std::pair<std::string, std::string>> bindings;
    std::string relation;

    Witness& bind(std::string name, const Scalar& v) { return bind(std::move(name), v.to_string()); }
    Witness& bind(std::string name, const Vector& v) { return bind(std::move(name), v.to_string()); }
    Witness& bind(std::string name, const HyperSet& s) { return bind(std::move(name), s.to_string()); }
    Witness& bind(std::string name, const Rational& v) { return bind(std::move(name), v.to_string()); }
    Witness& bind(std::string name, std::string value)
    {
        bindings.emplace_back(std::move(name), std::move(value));
        return *this;
    }
    Witness& with_relation(std::string r)
    {
        relation = std::move(r);
        return *this;
    }

    /// Value bound to name, or nullptr.
    const std::string* find(std::string_view name) const;
    std::string to_string() const;
};

/// Rebuilds the sampled tuple from a witness's a, b, x, y, z bindings
/// (missing ones default to zero) so the failing check can be replayed.
Sample replay_sample(const Witness& w, const ModelSpec& model);

/// Verdict of one item on one tuple.
struct Outcome {
    enum class Kind { skip, pass, fail, unbounded };
    Kind kind = Kind::pass;
    Witness witness;

    static Outcome pass() { return {}; }
    static Outcome skip() { return {Kind::skip, {}}; }
    static Outcome fail(Witness w) { return {Kind::fail, std::move(w)}; }
    static Outcome unbounded(Witness w) { return {Kind::unbounded, std::move(w)}; }
    static Outcome check(bool ok, Witness w) { return ok ? pass() : fail(std::move(w)); }
};

struct ItemCheck {
    std::string id;
    /// The relation being checked, as a formula.
    std::string anchor;
    std::function<Outcome(const Sample&)> eval;
};

enum class Status { pass, fail, vacuous, unbounded };

std::string_view to_string(Status s);

struct ItemReport {
    std::string id;
    std::string anchor;
    Status status = Status::pass;
    std::size_t samples = 0;
    std::vector<Witness> witnesses;
};

struct CheckReport {
    std::string model;
    std::string suite;
    std::vector<ItemReport> items;

    const ItemReport* item(std::string_view id) const;
    /// fail > unbounded > pass > vacuous.
    Status summary() const;
    /// No item failed or is unbounded.
    bool ok() const;
    /// Every item passed outright.
    bool all_pass() const;
};

inline constexpr std::size_t kMaxWitnesses = 3;

/// Serial reference kernel.
std::vector<Outcome> evaluate_serial(const ItemCheck& check, std::span<const Sample> samples);
/// OpenMP kernel; outcomes are stored by tuple index, so the result equals
/// the serial one. An exception from the lowest failing index is rethrown.
std::vector<Outcome> evaluate_parallel(const ItemCheck& check, std::span<const Sample> samples);

/// Folds per-tuple outcomes: any fail -> fail (first kMaxWitnesses fails in
/// tuple order), else any unbounded -> unbounded, else pass; vacuous when
/// every tuple was skipped.
ItemReport summarize(const ItemCheck& check, std::span<const Outcome> outcomes);

ItemReport evaluate_item(const ItemCheck& check, std::span<const Sample> samples, Exec exec);

/// Runs every item over the samples.
CheckReport evaluate_suite(std::string suite, const std::vector<ItemCheck>& items,
                           std::span<const Sample> samples, Exec exec);

/// Precondition failed: statuses become vacuous and witnesses are dropped,
/// except that an unbounded supremum is still reported as unbounded.
void mark_vacuous(ItemReport& item);
void mark_vacuous(CheckReport& report);

}  // namespace hvs
