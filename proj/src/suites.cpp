#include "hvs/suites.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hvs/essential.hpp"
#include "hvs/wvs_axioms.hpp"

namespace hvs {

bool is_suite_name(std::string_view name)
{
    return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

bool suite_requires_inner_product(std::string_view name)
{
    return name == "real_ip" || name == "hip" || name == "lemma_34" || name == "theorem_normal" ||
           name == "norm_props";
}

CheckReport run_suite(std::string_view name, const ModelSpec& model, const std::optional<InnerProductSpec>& ip,
                      const SampleConfig& cfg)
{
    if (!is_suite_name(name)) throw UnknownSuite("unknown suite '" + std::string(name) + "'");
    if (suite_requires_inner_product(name) && !ip) {
        return {{}, std::string(name), {{"inner_product", "an inner product is declared", Status::vacuous, 0, {}}}};
    }
    if (name == "wvs_axioms") return check_wvs_axioms(model, cfg);
    if (name == "lemma_basic") return check_lemma_basic(model, cfg);
    if (name == "weak_normal") return check_weak_normal(model, cfg);
    if (name == "strong_normal") return check_strong_normal(model, cfg);
    if (name == "normal_equiv") return check_normal_equivalence(model, cfg);
    if (name == "real_ip") return check_real_ip_axioms(model, *ip, cfg);
    if (name == "hip") return check_hip_axioms(model, *ip, cfg);
    if (name == "lemma_34") return check_lemma_34(model, *ip, cfg);
    if (name == "theorem_normal") return check_theorem_normal(model, *ip, cfg);
    return check_norm_props(model, *ip, cfg);
}

std::vector<CheckReport> run_suites(const ModelSpec& model, const std::optional<InnerProductSpec>& ip,
                                    const SampleConfig& cfg, const std::vector<std::string>& suites,
                                    const std::string& model_id)
{
    for (const auto& s : suites)
        if (!is_suite_name(s)) throw UnknownSuite("unknown suite '" + s + "'");
    std::vector<CheckReport> out;
    for (const auto& s : suites) {
        out.push_back(run_suite(s, model, ip, cfg));
        out.back().model = model_id;
    }
    return out;
}

std::vector<ItemCheck> suite_items(std::string_view name, const ModelSpec& model, const InnerProductSpec& ip,
                                   std::size_t depth)
{
    if (name == "wvs_axioms") return wvs_axiom_items(model, depth);
    if (name == "lemma_basic") return lemma_basic_items(model, depth);
    if (name == "weak_normal") return weak_normal_items(model, depth);
    if (name == "strong_normal") return strong_normal_items(model, depth);
    if (name == "real_ip") return real_ip_items(model, ip, depth);
    if (name == "hip") return hip_items(model, ip, depth);
    if (name == "lemma_34") return lemma_34_items(model, ip, depth);
    if (name == "norm_props") return norm_items(model, ip, depth);
    if (!is_suite_name(name)) throw UnknownSuite("unknown suite '" + std::string(name) + "'");
    return {};
}

// ---------------------------------------------------------------------------
// Reports

std::string report_json(const std::string& model_id, std::uint64_t seed, const std::vector<CheckReport>& reports)
{
    using json = nlohmann::ordered_json;
    json suites = json::array();
    for (const auto& r : reports) {
        json items = json::array();
        for (const auto& it : r.items) {
            json witnesses = json::array();
            for (const auto& w : it.witnesses) {
                json obj = json::object();
                for (const auto& [k, v] : w.bindings) obj[k] = v;
                obj["relation"] = w.relation;
                witnesses.push_back(std::move(obj));
            }
            items.push_back({{"id", it.id},
                             {"anchor", it.anchor},
                             {"status", std::string(to_string(it.status))},
                             {"samples", it.samples},
                             {"witnesses", std::move(witnesses)}});
        }
        suites.push_back({{"name", r.suite}, {"items", std::move(items)}});
    }
    const json doc = {{"model", model_id}, {"seed", seed}, {"suites", std::move(suites)}};
    return doc.dump(2) + "\n";
}

namespace {

std::string upper(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

}  // namespace

std::string report_text(const std::string& model_id, const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    os << "model " << model_id << "\n";
    std::size_t bad = 0;
    for (const auto& r : reports) {
        os << "suite " << r.suite << ": " << to_string(r.summary()) << "\n";
        for (const auto& it : r.items) {
            os << "  " << upper(to_string(it.status));
            os << std::string(10 - to_string(it.status).size(), ' ') << it.id << "  [" << it.anchor << "]  ("
               << it.samples << " samples)\n";
            for (const auto& w : it.witnesses) os << "            witness: " << w.to_string() << "\n";
            if (it.status == Status::fail || it.status == Status::unbounded) ++bad;
        }
    }
    os << (bad ? std::to_string(bad) + " item(s) failed or unbounded" : std::string("all checks passed")) << "\n";
    return os.str();
}

bool all_ok(const std::vector<CheckReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<CatalogVerdict> catalog_verdicts()
{
    constexpr auto P = Status::pass;
    constexpr auto F = Status::fail;
    constexpr auto V = Status::vacuous;
    constexpr auto U = Status::unbounded;
    const auto models = catalog_models(2);
    //        wvs lemma weak strong equiv real_ip hip lemma_34 theorem norm
    return {
        {models[0], {P, P, P, P, P, P, P, P, P, P}},  // trivial
        {models[1], {P, P, P, P, P, F, P, P, P, P}},  // zero_augmented
        {models[2], {P, P, P, P, P, F, P, P, P, P}},  // geometric(1/2)
        {models[3], {P, P, P, P, P, U, F, V, V, U}},  // geometric(2)
        {models[4], {P, P, P, F, F, F, F, V, V, V}},  // sign
    };
}

std::string catalog_table()
{
    std::ostringstream os;
    os << "Built-in families (field Q, dim 2, inner dot):\n\n";
    os << "  trivial          a o x = {a x}\n";
    os << "  zero_augmented   a o x = {a x, 0}\n";
    os << "  geometric(r)     a o x = {a x r^k : k >= 0}   (r > 0, r != 1)\n";
    os << "  sign             a o x = {a x, -a x}          (field Q only)\n\n";

    constexpr int first = 16;
    os << std::string(first, ' ');
    auto width = [](std::string_view suite) { return std::max<std::size_t>(suite.size(), 9) + 2; };
    std::string header;
    for (auto s : kSuiteNames) header += std::string(s) + std::string(width(s) - s.size(), ' ');
    os << header.substr(0, header.find_last_not_of(' ') + 1) << "\n";
    for (const auto& v : catalog_verdicts()) {
        const std::string name = v.model.family_string();
        os << name << std::string(first - name.size(), ' ');
        std::string row;
        for (std::size_t i = 0; i < kSuiteNames.size(); ++i) {
            const auto status = to_string(v.suites[i]);
            row += std::string(status) + std::string(width(kSuiteNames[i]) - status.size(), ' ');
        }
        os << row.substr(0, row.find_last_not_of(' ') + 1) << "\n";
    }
    return os.str();
}

}  // namespace hvs
