#pragma once

// The .hvs model-description language.
//
//   file      := model check* ;
//   model     := "model" STRING "{" "field" ("Q"|"Qi") "dim" INT "product" family ["inner" ip] "}" ;
//   family    := "trivial" | "zero_augmented" | "geometric" "(" RATIONAL ")" | "sign" ;
//   ip        := "dot" | "weighted_dot" "(" RATIONAL ("," RATIONAL)* ")" ;
//   check     := "check" IDENT (key "=" INT)* ;
//   RATIONAL  := INT ["/" INT] ;
//
// "#" starts a comment running to end of line. Check keys are seed,
// samples, height and depth.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hvs/checker.hpp"
#include "hvs/inner.hpp"
#include "hvs/models.hpp"

namespace hvs::dsl {

struct SourcePos {
    int line = 1;
    int column = 1;
};

inline constexpr int kMaxDim = 16;
inline constexpr std::size_t kMaxSamples = 1'000'000;
inline constexpr std::size_t kMaxDepth = 64;
inline constexpr long kMaxHeight = 1'000'000;

struct CheckDirective {
    std::string suite;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<long> height;
    std::optional<std::size_t> depth;
    SourcePos pos;  // not part of equality

    friend bool operator==(const CheckDirective& a, const CheckDirective& b)
    {
        return a.suite == b.suite && a.seed == b.seed && a.samples == b.samples && a.height == b.height &&
               a.depth == b.depth;
    }
};

/// Values given on the command line.
struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<long> height;
    std::optional<std::size_t> depth;
};

/// SampleConfig defaults, then the directive's keys, then command-line values.
SampleConfig effective_config(const CheckDirective& check, const ConfigOverrides& cli);

struct ModelFile {
    std::string name;
    ModelSpec model;
    std::optional<InnerProductSpec> inner;
    std::vector<CheckDirective> checks;

    friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

struct ParseDiagnostic {
    enum class Kind { syntax, semantic };
    Kind kind = Kind::syntax;
    int line = 1;
    int column = 1;
    std::string message;
    std::vector<std::string> expected;
    /// The offending source line, without its newline.
    std::string source_line;

    /// "<file>:<line>:<col>: error: <message>" followed by the quoted line and a caret.
    std::string format(std::string_view filename) const;
};

using ParseResult = std::variant<ModelFile, ParseDiagnostic>;

ParseResult parse_model_file(std::string_view text);

/// Canonical text; parse_model_file(print_model_file(m)) yields m.
std::string print_model_file(const ModelFile& file);

}  // namespace hvs::dsl
