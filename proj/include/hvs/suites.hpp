#pragma once

// Orchestration of every check suite and the JSON report format.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hvs/checker.hpp"
#include "hvs/inner.hpp"
#include "hvs/models.hpp"

namespace hvs {

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Declared order; run_suites always runs in this order.
inline constexpr std::array<std::string_view, 10> kSuiteNames = {
    "wvs_axioms", "lemma_basic", "weak_normal", "strong_normal", "normal_equiv",
    "real_ip",    "hip",         "lemma_34",    "theorem_normal", "norm_props",
};

bool is_suite_name(std::string_view name);
bool suite_requires_inner_product(std::string_view name);

/// Runs one suite. A suite that needs an inner product, run without one,
/// yields a single vacuous "inner_product" item.
CheckReport run_suite(std::string_view name, const ModelSpec& model, const std::optional<InnerProductSpec>& ip,
                      const SampleConfig& cfg);

/// Runs the named suites in the order given. Throws UnknownSuite.
std::vector<CheckReport> run_suites(const ModelSpec& model, const std::optional<InnerProductSpec>& ip,
                                    const SampleConfig& cfg, const std::vector<std::string>& suites,
                                    const std::string& model_id = {});

/// Per-tuple items of a suite, for replaying witnesses. Meta suites
/// (normal_equiv, theorem_normal) and gated aggregates have none.
std::vector<ItemCheck> suite_items(std::string_view name, const ModelSpec& model, const InnerProductSpec& ip,
                                   std::size_t depth);

/// { "model", "seed", "suites": [ { "name", "items": [ { "id", "anchor",
/// "status", "samples", "witnesses" } ] } ] }, two-space indent, trailing newline.
/// Witness objects list their bindings in order followed by "relation".
std::string report_json(const std::string& model_id, std::uint64_t seed, const std::vector<CheckReport>& reports);

/// Human-readable report.
std::string report_text(const std::string& model_id, const std::vector<CheckReport>& reports);

bool all_ok(const std::vector<CheckReport>& reports);

/// Documented suite-level outcome for each catalog model (dim 2, field Q,
/// dot product), in kSuiteNames order.
struct CatalogVerdict {
    ModelSpec model;
    std::array<Status, kSuiteNames.size()> suites;
};

std::vector<CatalogVerdict> catalog_verdicts();
std::string catalog_table();

}  // namespace hvs
