#include <gtest/gtest.h>
#include <json.hpp>

#include "hvs/checker.hpp"
#include "hvs/essential.hpp"
#include "hvs/inner.hpp"
#include "hvs/suites.hpp"
#include "test_util.hpp"

using namespace hvs;
using hvs::test::vec;

namespace {

const InnerProductSpec kDot = InnerProductSpec::dot();

std::vector<std::string> all_suites()
{
    return {kSuiteNames.begin(), kSuiteNames.end()};
}

bool same_report(const CheckReport& a, const CheckReport& b)
{
    if (a.suite != b.suite || a.items.size() != b.items.size()) return false;
    for (std::size_t i = 0; i < a.items.size(); ++i) {
        const auto& x = a.items[i];
        const auto& y = b.items[i];
        if (x.id != y.id || x.status != y.status || x.samples != y.samples || x.witnesses.size() != y.witnesses.size())
            return false;
        for (std::size_t k = 0; k < x.witnesses.size(); ++k)
            if (x.witnesses[k].to_string() != y.witnesses[k].to_string()) return false;
    }
    return true;
}

}  // namespace

TEST(SampleStream, ForcedDegenerateCases)
{
    const auto s = sample_stream(SampleConfig{}, FieldTag::RealRationals, 2);
    ASSERT_EQ(s.size(), 500u);
    EXPECT_EQ(s[0].a, Scalar(0));
    EXPECT_TRUE(s[0].x.is_zero());
    EXPECT_EQ(s[3].a, Scalar(1));
    EXPECT_EQ(s[6].a, Scalar(-1));
    EXPECT_EQ(s[1].b, Scalar(1));
    EXPECT_EQ(s[2].b, Scalar(-1));
    EXPECT_TRUE(s[1].y.is_zero());
    EXPECT_EQ(s[2].y, s[2].x);
    EXPECT_EQ(s[3].y, -s[3].x);
}

TEST(SampleStream, HeightBoundsAndField)
{
    for (long h : {1L, 3L, 10L}) {
        const SampleConfig cfg{.seed = 99, .samples = 400, .height = h};
        for (const auto& s : sample_stream(cfg, FieldTag::GaussianRationals, 3)) {
            for (const auto& v : {s.x, s.y, s.z}) {
                ASSERT_EQ(v.dim(), 3u);
                for (const auto& c : v.coords()) {
                    for (const auto& part : {c.re(), c.im()}) {
                        // Canonical form can only shrink the drawn numerator and denominator.
                        EXPECT_GE(mpz_class(part.value().get_den()), 1);
                        EXPECT_LE(mpz_class(part.value().get_den()), h);
                        EXPECT_LE(mpz_class(abs(part.value().get_num())), h);
                    }
                }
            }
        }
    }
    for (const auto& s : sample_stream(SampleConfig{}, FieldTag::RealRationals, 2)) {
        EXPECT_TRUE(s.a.is_real());
        EXPECT_TRUE(s.x.in_field(FieldTag::RealRationals));
    }
    EXPECT_THROW(sample_stream(SampleConfig{.height = 0}, FieldTag::RealRationals, 2), ShapeError);
}

TEST(SampleStream, PinnedGeneratorOutput)
{
    // mt19937_64 seeded with 42, values mapped by modulo; first unforced tuple.
    // Cross-checked against an independent Python implementation of the generator.
    const auto s = sample_stream(SampleConfig{.samples = 13}, FieldTag::RealRationals, 2);
    EXPECT_EQ(s[12].a.to_string(), "-2");
    EXPECT_EQ(s[12].b.to_string(), "5");
    EXPECT_EQ(s[12].x.to_string(), "(1/7, 1/4)");
    EXPECT_EQ(s[12].y.to_string(), "(4/7, -2/3)");
    const auto c = sample_stream(SampleConfig{.samples = 13}, FieldTag::GaussianRationals, 2);
    EXPECT_EQ(c[12].a.to_string(), "-2+2*i");
    // Real streams are the real parts of complex streams.
    EXPECT_EQ(c[12].a.re(), s[12].a.re());
    EXPECT_EQ(c[12].x[1].re(), s[12].x[1].re());
}

TEST(SampleStream, DeterministicAndPrefixStable)
{
    const auto a = sample_stream(SampleConfig{.seed = 7, .samples = 300}, FieldTag::GaussianRationals, 2);
    const auto b = sample_stream(SampleConfig{.seed = 7, .samples = 300}, FieldTag::GaussianRationals, 2);
    const auto p = sample_stream(SampleConfig{.seed = 7, .samples = 100}, FieldTag::GaussianRationals, 2);
    const auto other = sample_stream(SampleConfig{.seed = 8, .samples = 300}, FieldTag::GaussianRationals, 2);
    int differ = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].a, b[i].a);
        EXPECT_EQ(a[i].z, b[i].z);
        if (i < p.size()) {
            EXPECT_EQ(a[i].x, p[i].x);
            EXPECT_EQ(a[i].b, p[i].b);
        }
        differ += a[i].z != other[i].z;
    }
    EXPECT_GT(differ, 250);
}

TEST(Kernels, SerialAndParallelAgree)
{
    const SampleConfig base{.samples = 300};
    for (const auto& m : catalog_models()) {
        SampleConfig s = base;
        s.exec = Exec::serial;
        SampleConfig p = base;
        p.exec = Exec::parallel;
        const auto rs = run_suites(m, kDot, s, all_suites());
        const auto rp = run_suites(m, kDot, p, all_suites());
        ASSERT_EQ(rs.size(), rp.size());
        for (std::size_t i = 0; i < rs.size(); ++i) EXPECT_TRUE(same_report(rs[i], rp[i])) << rs[i].suite;
    }
}

TEST(Kernels, ParallelRethrowsLowestIndexError)
{
    const ItemCheck boom{"boom", "", [](const Sample& s) -> Outcome {
                             if (s.a == Scalar(1)) throw std::runtime_error("a is one");
                             return Outcome::pass();
                         }};
    const auto samples = sample_stream(SampleConfig{.samples = 100}, FieldTag::RealRationals, 1);
    EXPECT_THROW(evaluate_parallel(boom, samples), std::runtime_error);
    EXPECT_THROW(evaluate_serial(boom, samples), std::runtime_error);
}

TEST(Summarize, StatusFolding)
{
    const ItemCheck c{"c", "anchor", nullptr};
    const Witness w = Witness{}.bind("x", vec("(1)"));
    std::vector<Outcome> skips(3, Outcome::skip());
    EXPECT_EQ(summarize(c, skips).status, Status::vacuous);

    std::vector<Outcome> mixed{Outcome::pass(), Outcome::unbounded(w), Outcome::skip()};
    auto r = summarize(c, mixed);
    EXPECT_EQ(r.status, Status::unbounded);
    EXPECT_EQ(r.samples, 2u);

    mixed.push_back(Outcome::fail(w));
    for (int i = 0; i < 5; ++i) mixed.push_back(Outcome::fail(Witness{}.bind("i", std::to_string(i))));
    r = summarize(c, mixed);
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_EQ(r.witnesses.size(), kMaxWitnesses);
    EXPECT_EQ(r.witnesses[0].to_string(), "x = (1)");
    EXPECT_EQ(r.witnesses[1].to_string(), "i = 0");
}

TEST(RunSuites, Examples)
{
    const auto za = run_suites(test::zero_aug(), kDot, SampleConfig{}, all_suites());
    ASSERT_EQ(za.size(), 10u);
    for (const auto& r : za) {
        if (r.suite == "real_ip") {
            EXPECT_EQ(r.item("sup_homogeneity")->status, Status::fail);
            EXPECT_EQ(r.summary(), Status::fail);
        } else {
            EXPECT_TRUE(r.all_pass()) << r.suite;
        }
    }
    EXPECT_FALSE(all_ok(za));

    const auto sg = run_suites(test::sign(), kDot, SampleConfig{}, {"strong_normal", "hip"});
    ASSERT_EQ(sg.size(), 2u);
    EXPECT_EQ(sg[0].suite, "strong_normal");
    for (const auto& r : sg) {
        EXPECT_EQ(r.summary(), Status::fail);
        for (const auto& it : r.items)
            if (it.status == Status::fail) EXPECT_FALSE(it.witnesses.empty());
    }

    const auto tr = run_suites(test::trivial(), kDot, SampleConfig{}, all_suites());
    for (const auto& r : tr) EXPECT_TRUE(r.all_pass()) << r.suite;
    EXPECT_TRUE(all_ok(tr));
}

TEST(RunSuites, Errors)
{
    EXPECT_THROW(run_suites(test::trivial(), kDot, SampleConfig{}, {"nope"}), UnknownSuite);
    const auto r = run_suites(test::trivial(), std::nullopt, SampleConfig{}, {"hip"});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].summary(), Status::vacuous);
}

TEST(Reports, JsonSchemaAndDeterminism)
{
    const auto reports = run_suites(test::sign(), kDot, SampleConfig{}, all_suites(), "sign");
    const std::string a = report_json("sign", 42, reports);
    const std::string b = report_json("sign", 42, run_suites(test::sign(), kDot, SampleConfig{}, all_suites(), "sign"));
    EXPECT_EQ(a, b);

    const auto doc = nlohmann::json::parse(a);
    EXPECT_EQ(doc.at("model"), "sign");
    EXPECT_EQ(doc.at("seed"), 42);
    ASSERT_EQ(doc.at("suites").size(), 10u);
    for (const auto& s : doc.at("suites")) {
        EXPECT_TRUE(s.at("name").is_string());
        for (const auto& it : s.at("items")) {
            EXPECT_TRUE(it.at("id").is_string());
            EXPECT_TRUE(it.at("anchor").is_string());
            const std::string st = it.at("status");
            EXPECT_TRUE(st == "pass" || st == "fail" || st == "vacuous" || st == "unbounded");
            EXPECT_TRUE(it.at("samples").is_number_unsigned());
            EXPECT_TRUE(it.at("witnesses").is_array());
            if (st == "fail") EXPECT_FALSE(it.at("witnesses").empty());
        }
    }
}

TEST(Reports, MonotoneInSampleCount)
{
    // Failures are counterexamples: more samples never turn a fail into a pass.
    for (const auto& m : catalog_models()) {
        const auto small = run_suites(m, kDot, SampleConfig{.samples = 60}, all_suites());
        const auto large = run_suites(m, kDot, SampleConfig{.samples = 500}, all_suites());
        for (std::size_t i = 0; i < small.size(); ++i) {
            for (const auto& it : small[i].items) {
                if (it.status != Status::fail) continue;
                const auto* big = large[i].item(it.id);
                ASSERT_NE(big, nullptr);
                EXPECT_EQ(big->status, Status::fail) << m.describe() << " " << small[i].suite << "/" << it.id;
            }
        }
    }
}

TEST(Reports, WitnessesReplay)
{
    // Re-evaluating an item on the sample recovered from its witness reproduces the status.
    const SampleConfig cfg{};
    for (const auto& m : catalog_models()) {
        for (const auto& r : run_suites(m, kDot, cfg, all_suites())) {
            std::vector<ItemCheck> items;
            try {
                items = suite_items(r.suite, m, kDot, cfg.depth);
            } catch (const UnknownSuite&) {
                continue;  // derived suites without per-sample items
            }
            for (const auto& it : r.items) {
                if (it.status != Status::fail && it.status != Status::unbounded) continue;
                const auto check = std::find_if(items.begin(), items.end(), [&](const ItemCheck& c) { return c.id == it.id; });
                if (check == items.end()) continue;
                for (const auto& w : it.witnesses) {
                    const auto outcome = check->eval(replay_sample(w, m));
                    const auto expect = it.status == Status::fail ? Outcome::Kind::fail : Outcome::Kind::unbounded;
                    EXPECT_EQ(outcome.kind, expect) << m.describe() << " " << r.suite << "/" << it.id;
                    EXPECT_EQ(outcome.witness.to_string(), w.to_string());
                }
            }
        }
    }
}

TEST(Catalog, VerdictTableMatchesComputedSummaries)
{
    const auto verdicts = catalog_verdicts();
    ASSERT_EQ(verdicts.size(), 5u);
    for (const auto& v : verdicts) {
        const auto reports = run_suites(v.model, kDot, SampleConfig{}, all_suites());
        for (std::size_t i = 0; i < kSuiteNames.size(); ++i)
            EXPECT_EQ(reports[i].summary(), v.suites[i]) << v.model.describe() << " " << kSuiteNames[i];
    }
    const std::string table = catalog_table();
    for (const char* family : {"trivial", "zero_augmented", "geometric(1/2)", "geometric(2)", "sign"})
        EXPECT_NE(table.find(family), std::string::npos);
}
