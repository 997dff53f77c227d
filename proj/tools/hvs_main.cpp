// hvs: load .hvs model files, run check suites, query essential points and suprema.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage/parse/semantic error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hvs/dsl.hpp"
#include "hvs/essential.hpp"
#include "hvs/inner.hpp"
#include "hvs/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError {
    std::string message;
};

hvs::dsl::ModelFile load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    auto result = hvs::dsl::parse_model_file(ss.str());
    if (auto* diag = std::get_if<hvs::dsl::ParseDiagnostic>(&result)) throw UsageError{diag->format(path)};
    return std::get<hvs::dsl::ModelFile>(std::move(result));
}

int run_check(const std::string& path, const std::string& json_path, const hvs::dsl::ConfigOverrides& cli)
{
    auto file = load(path);
    std::vector<hvs::dsl::CheckDirective> checks = file.checks;
    if (checks.empty()) {
        for (auto name : hvs::kSuiteNames)
            if (file.inner || !hvs::suite_requires_inner_product(name)) checks.push_back({std::string(name)});
    }

    std::vector<hvs::CheckReport> reports;
    for (const auto& c : checks) {
        const auto cfg = hvs::dsl::effective_config(c, cli);
        auto r = hvs::run_suites(file.model, file.inner, cfg, {c.suite}, file.name);
        reports.push_back(std::move(r.front()));
    }

    std::cout << hvs::report_text(file.name + " (" + file.model.describe() +
                                      (file.inner ? ", inner " + file.inner->to_string() : std::string()) + ")",
                                  reports);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw UsageError{"cannot write '" + json_path + "'"};
        out << hvs::report_json(file.name, hvs::dsl::effective_config(checks.front(), cli).seed, reports);
    }
    return hvs::all_ok(reports) ? kExitPass : kExitFail;
}

int run_essential(const std::string& path, const std::string& a_text, const std::string& x_text, std::size_t depth)
{
    const auto file = load(path);
    const auto a = hvs::Scalar::parse(a_text);
    const auto x = hvs::Vector::parse(x_text);
    hvs::require_compatible(file.model, a);
    const auto E = hvs::essential_points(file.model, a, x, depth);
    std::cout << "a o x = " << hvs::product(file.model, a, x).to_string() << "\n";
    std::cout << "E = " << E.to_string() << "\n";
    return kExitPass;
}

int run_sup(const std::string& path, const std::string& a_text, const std::string& x_text, const std::string& y_text)
{
    const auto file = load(path);
    if (!file.inner) throw UsageError{"model '" + file.name + "' declares no inner product"};
    const auto a = hvs::Scalar::parse(a_text);
    const auto x = hvs::Vector::parse(x_text);
    const auto y = hvs::Vector::parse(y_text);
    const auto sup = hvs::sup_pairing(file.model, *file.inner, a, x, y);
    std::cout << "sup (a o x, y) = " << sup.to_string() << "\n";
    std::cout << "a(x, y) = " << (a * hvs::pairing(*file.inner, x, y)).to_string() << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weak hypervector space model checker"};
    app.require_subcommand(1);

    std::string path;
    std::string json_path;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t depth = 0;
    auto* check = app.add_subcommand("check", "Run the check directives of a model file");
    check->add_option("file", path, "Model file (.hvs)")->required();
    check->add_option("--json", json_path, "Write the JSON report here");
    auto* seed_opt = check->add_option("--seed", seed, "Override the sampling seed");
    auto* samples_opt = check->add_option("--samples", samples, "Override the sample count")->check(CLI::PositiveNumber);
    auto* depth_opt = check->add_option("--depth", depth, "Override the enumeration depth")->check(CLI::PositiveNumber);

    std::string a_text;
    std::string x_text;
    std::string y_text;
    std::size_t ess_depth = hvs::SampleConfig{}.depth;
    auto* essential = app.add_subcommand("essential", "Print the essential points of a o x");
    essential->add_option("file", path, "Model file (.hvs)")->required();
    essential->add_option("--a", a_text, "Scalar, e.g. 3 or 1/2+i")->required();
    essential->add_option("--x", x_text, "Vector, e.g. \"(1, 2)\"")->required();
    essential->add_option("--depth", ess_depth, "Enumeration depth")->check(CLI::PositiveNumber);

    auto* sup = app.add_subcommand("sup", "Print sup { (z, y) : z in a o x }");
    sup->add_option("file", path, "Model file (.hvs)")->required();
    sup->add_option("--a", a_text, "Scalar")->required();
    sup->add_option("--x", x_text, "Vector")->required();
    sup->add_option("--y", y_text, "Vector")->required();

    auto* catalog = app.add_subcommand("catalog", "List the built-in families and their verdicts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        std::cerr << "hvs: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check) {
            hvs::dsl::ConfigOverrides cli;
            if (*seed_opt) cli.seed = seed;
            if (*samples_opt) cli.samples = samples;
            if (*depth_opt) cli.depth = depth;
            return run_check(path, json_path, cli);
        }
        if (*essential) return run_essential(path, a_text, x_text, ess_depth);
        if (*sup) return run_sup(path, a_text, x_text, y_text);
        if (*catalog) {
            std::cout << hvs::catalog_table();
            return kExitPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "hvs: " << e.message << (e.message.ends_with('\n') ? "" : "\n");
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "hvs: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
