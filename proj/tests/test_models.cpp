#include <random>

#include <gtest/gtest.h>

#include "hvs/checker.hpp"
#include "hvs/wvs_axioms.hpp"
#include "test_util.hpp"

using namespace hvs;
using hvs::test::sc;
using hvs::test::vec;

namespace {

// Brute-force ray membership: walk k = 0..limit and compare exactly.
bool ray_member_by_walk(const Vector& base, const Rational& r, const Vector& v, int limit = 200)
{
    Rational p(1);
    for (int k = 0; k <= limit; ++k, p *= r)
        if (Scalar(p) * base == v) return true;
    return false;
}

std::vector<Vector> candidates_around(const HyperSet& s)
{
    // Members at depth <= 4, plus near misses: scalings that are not powers of the ratio.
    std::vector<Vector> out;
    for (const auto& v : s.enumerate(5)) {
        out.push_back(v);
        out.push_back(Scalar(Rational(3)) * v);
        out.push_back(Scalar(Rational(-1)) * v);
        out.push_back(Scalar(Rational(2)) * v);
        out.push_back(Scalar(Rational(1, 2)) * v);
    }
    return out;
}

}  // namespace

TEST(Vector, ParseAndPrint)
{
    EXPECT_EQ(vec("( 1/2 , -3 )").to_string(), "(1/2, -3)");
    EXPECT_EQ(vec("(1+i, 0)").to_string(), "(1+i, 0)");
    EXPECT_THROW(vec("1, 2"), SyntaxError);
    EXPECT_THROW(vec("()"), SyntaxError);
    EXPECT_THROW(vec("(1,)"), SyntaxError);
    EXPECT_THROW(vec("(1) (2)"), SyntaxError);
    EXPECT_THROW(vec("(1)") + vec("(1, 2)"), ShapeError);
}

TEST(HyperSet, Normalization)
{
    EXPECT_TRUE(set_equal(HyperSet::ray(vec("(0, 0)"), Rational(1, 2)), HyperSet::singleton(vec("(0, 0)"))));
    EXPECT_TRUE(HyperSet::ray(vec("(0)"), Rational(3)).is_finite());
    EXPECT_TRUE(std::holds_alternative<FiniteSet>(HyperSet::sign_pair(vec("(0, 0)")).shape()));
    EXPECT_EQ(HyperSet::finite({vec("(1)"), vec("(1)"), vec("(2)")}).enumerate(1).size(), 2u);
    EXPECT_THROW(HyperSet::finite({}), ShapeError);
    EXPECT_THROW(HyperSet::finite({vec("(1)"), vec("(1, 2)")}), ShapeError);
    EXPECT_THROW(HyperSet::ray(vec("(1)"), Rational(1)), ShapeError);
    EXPECT_THROW(HyperSet::ray(vec("(1)"), Rational(-1, 2)), ShapeError);
    EXPECT_THROW(HyperSet::ray(vec("(1)"), Rational(0)), ShapeError);
}

TEST(Product, Examples)
{
    const auto za = product(test::zero_aug(), Scalar(3), vec("(1, 2)"));
    EXPECT_TRUE(set_equal(za, HyperSet::finite({vec("(3, 6)"), vec("(0, 0)")})));

    const auto g = product(test::geometric(Rational(1, 2), 1), Scalar(2), vec("(3)"));
    const auto* ray = std::get_if<GeometricRay>(&g.shape());
    ASSERT_NE(ray, nullptr);
    EXPECT_EQ(ray->base, vec("(6)"));
    EXPECT_EQ(ray->ratio, Rational(1, 2));

    for (const auto& m : catalog_models()) {
        const auto x = vec("(2/3, -5)");
        EXPECT_TRUE(product(m, Scalar(1), x).contains(x)) << m.describe();
        EXPECT_TRUE(set_equal(product(m, Scalar(0), x), HyperSet::singleton(Vector::zero(2))));
        EXPECT_TRUE(set_equal(product(m, Scalar(5), Vector::zero(2)), HyperSet::singleton(Vector::zero(2))));
    }
}

TEST(Product, RejectsMismatch)
{
    EXPECT_THROW(product(test::trivial(), Scalar(1), vec("(1)")), ShapeError);
    EXPECT_THROW(product(test::trivial(), Scalar::i(), vec("(1, 0)")), ShapeError);
    EXPECT_THROW(product(test::trivial(), Scalar(1), vec("(i, 0)")), ShapeError);
}

TEST(Contains, Examples)
{
    const auto ray = HyperSet::ray(vec("(6)"), Rational(1, 2));
    EXPECT_TRUE(ray.contains(vec("(3/2)")));
    EXPECT_FALSE(ray.contains(vec("(12)")));
    EXPECT_TRUE(HyperSet::finite({vec("(3, 6)"), vec("(0, 0)")}).contains(vec("(0, 0)")));
    EXPECT_FALSE(ray.contains(vec("(0)")));
    EXPECT_FALSE(ray.contains(vec("(-6)")));
    EXPECT_FALSE(ray.contains(vec("(2)")));
    EXPECT_THROW((void)ray.contains(vec("(1, 1)")), ShapeError);

    const auto ray2 = HyperSet::ray(vec("(1, 0)"), Rational(2));
    EXPECT_TRUE(ray2.contains(vec("(8, 0)")));
    EXPECT_FALSE(ray2.contains(vec("(8, 1)")));
    EXPECT_FALSE(ray2.contains(vec("(1/2, 0)")));

    const auto sp = HyperSet::sign_pair(vec("(1, 0)"));
    EXPECT_TRUE(sp.contains(vec("(-1, 0)")));
    EXPECT_FALSE(sp.contains(vec("(0, 0)")));
}

TEST(ExactLog, Values)
{
    EXPECT_EQ(exact_log(Rational(1, 8), Rational(1, 2)), 3ul);
    EXPECT_EQ(exact_log(Rational(1), Rational(2)), 0ul);
    EXPECT_FALSE(exact_log(Rational(2), Rational(1, 2)).has_value());
    EXPECT_FALSE(exact_log(Rational(6), Rational(2)).has_value());
    EXPECT_FALSE(exact_log(Rational(-4), Rational(2)).has_value());
    EXPECT_EQ(exact_log(Rational(81, 16), Rational(3, 2)), 4ul);
}

TEST(Enumerate, Examples)
{
    const std::vector<Vector> expect{vec("(6)"), vec("(3)"), vec("(3/2)")};
    EXPECT_EQ(HyperSet::ray(vec("(6)"), Rational(1, 2)).enumerate(3), expect);
    const std::vector<Vector> pair{vec("(1, 0)"), vec("(-1, 0)")};
    EXPECT_EQ(HyperSet::sign_pair(vec("(1, 0)")).enumerate(5), pair);
    const std::vector<Vector> zero{vec("(0, 0)")};
    EXPECT_EQ(HyperSet::singleton(vec("(0, 0)")).enumerate(10), zero);
}

TEST(IntersectNonempty, Examples)
{
    const auto s1 = product(test::zero_aug(), Scalar(2), vec("(1, 1)"));
    const auto s2 = HyperSet::finite({vec("(2, 2)"), vec("(4, 4)"), vec("(0, 0)")});
    const auto w = intersect_nonempty(s1, s2, 8);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, vec("(2, 2)"));

    EXPECT_FALSE(intersect_nonempty(HyperSet::singleton(vec("(1)")), HyperSet::singleton(vec("(2)")), 8));

    const auto ray = HyperSet::ray(vec("(6)"), Rational(1, 2));
    const auto w2 = intersect_nonempty(ray, ray, 8);
    ASSERT_TRUE(w2.has_value());
    EXPECT_EQ(*w2, vec("(6)"));
}

TEST(IntersectNonempty, RaysMeetingFarOut)
{
    // base2 = base1 * r^20: closed form finds it though depth-1 enumeration could not.
    const Rational r(1, 2);
    Rational p(1);
    for (int i = 0; i < 20; ++i) p *= r;
    const auto a = HyperSet::ray(vec("(1, 3)"), r);
    const auto b = HyperSet::ray(Scalar(p) * vec("(1, 3)"), r);
    const auto w = intersect_nonempty(a, b, 1);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(a.contains(*w));
    EXPECT_TRUE(b.contains(*w));
    EXPECT_FALSE(intersect_nonempty(a, HyperSet::ray(vec("(1, 4)"), r), 8));
}

TEST(ProductOfSet, Examples)
{
    const auto za = test::zero_aug();
    EXPECT_TRUE(set_equal(product_of_set(za, Scalar(2), HyperSet::finite({vec("(3, 0)"), vec("(0, 0)")})),
                          HyperSet::finite({vec("(6, 0)"), vec("(0, 0)")})));

    const auto g = test::geometric(Rational(1, 2), 1);
    EXPECT_TRUE(set_equal(product_of_set(g, Scalar(2), HyperSet::ray(vec("(3)"), Rational(1, 2))),
                          HyperSet::ray(vec("(6)"), Rational(1, 2))));

    for (const auto& m : catalog_models())
        EXPECT_TRUE(set_equal(product_of_set(m, Scalar(1), HyperSet::singleton(Vector::zero(2))),
                              HyperSet::singleton(Vector::zero(2))));
}

TEST(ProductOfSet, RejectsMixedShapes)
{
    const auto g = test::geometric(Rational(1, 2), 1);
    EXPECT_THROW(product_of_set(test::trivial(1), Scalar(1), HyperSet::ray(vec("(1)"), Rational(1, 2))), ShapeError);
    EXPECT_THROW(product_of_set(g, Scalar(1), HyperSet::ray(vec("(1)"), Rational(2))), ShapeError);
    EXPECT_THROW(product_of_set(g, Scalar(1), HyperSet::finite({vec("(1)"), vec("(3)")})), ShapeError);
}

TEST(SetEqual, Basics)
{
    const auto f1 = HyperSet::finite({vec("(1)"), vec("(2)")});
    const auto f2 = HyperSet::finite({vec("(2)"), vec("(1)")});
    EXPECT_TRUE(set_equal(f1, f2));
    EXPECT_FALSE(set_equal(f1, HyperSet::singleton(vec("(1)"))));
    EXPECT_TRUE(set_equal(HyperSet::sign_pair(vec("(1)")), HyperSet::sign_pair(vec("(-1)"))));
    EXPECT_TRUE(set_equal(HyperSet::sign_pair(vec("(1)")), HyperSet::finite({vec("(-1)"), vec("(1)")})));
    EXPECT_FALSE(set_equal(HyperSet::ray(vec("(1)"), Rational(2)), HyperSet::ray(vec("(2)"), Rational(2))));
}

TEST(ModelProperties, ContainsAgreesWithEnumerationAndWalk)
{
    const SampleConfig cfg{.seed = 5, .samples = 200};
    for (const auto& m : catalog_models()) {
        for (const auto& s : sample_stream(cfg, m.field, m.dim)) {
            const auto p = product(m, s.a, s.x);
            const auto listed = p.enumerate(16);
            for (const auto& v : candidates_around(p)) {
                const bool in_list = std::find(listed.begin(), listed.end(), v) != listed.end();
                const bool member = p.contains(v);
                if (const auto* r = std::get_if<GeometricRay>(&p.shape())) {
                    EXPECT_EQ(member, ray_member_by_walk(r->base, r->ratio, v)) << p.to_string() << " " << v.to_string();
                } else {
                    EXPECT_EQ(member, in_list) << p.to_string() << " " << v.to_string();
                }
                if (in_list) EXPECT_TRUE(member);
            }
        }
    }
}

TEST(ModelProperties, SetEqualityReflexiveAndSymmetric)
{
    const SampleConfig cfg{.seed = 6, .samples = 200};
    for (const auto& m : catalog_models()) {
        for (const auto& s : sample_stream(cfg, m.field, m.dim)) {
            const auto p = product(m, s.a, s.x);
            const auto q = product(m, s.b, s.y);
            EXPECT_TRUE(set_equal(p, p));
            EXPECT_EQ(set_equal(p, q), set_equal(q, p));
        }
    }
}

TEST(ModelProperties, NegationImage)
{
    const SampleConfig cfg{.seed = 7, .samples = 300};
    for (const auto& m : catalog_models()) {
        for (const auto& s : sample_stream(cfg, m.field, m.dim)) {
            const auto p = product(m, s.a, s.x);
            EXPECT_TRUE(set_equal(product(m, s.a, -s.x), p.negated()));
            EXPECT_TRUE(set_equal(product(m, -s.a, s.x), p.negated()));
        }
    }
}

TEST(ModelProperties, NoZeroBaseRays)
{
    const SampleConfig cfg{.seed = 8, .samples = 300};
    for (const auto& m : catalog_models()) {
        for (const auto& s : sample_stream(cfg, m.field, m.dim)) {
            const auto p = product(m, s.a, s.x);
            if (const auto* r = std::get_if<GeometricRay>(&p.shape())) EXPECT_FALSE(r->base.is_zero());
            if (const auto* sp = std::get_if<SignPair>(&p.shape())) EXPECT_FALSE(sp->base.is_zero());
        }
    }
}

TEST(WvsAxioms, EveryCatalogModelPasses)
{
    for (const auto& m : catalog_models()) {
        const auto report = check_wvs_axioms(m, SampleConfig{});
        ASSERT_EQ(report.items.size(), 5u);
        for (const auto& it : report.items) {
            EXPECT_EQ(it.status, Status::pass) << m.describe() << " " << it.id;
            EXPECT_TRUE(it.witnesses.empty());
            EXPECT_EQ(it.samples, 500u);
        }
    }
}

TEST(WvsAxioms, DetectsABrokenProduct)
{
    // A product that drops x from 1 o x must fail the unit axiom.
    const ItemCheck unit{"unit", "x in 1 o x", [](const Sample& s) {
                             const auto p = HyperSet::singleton(Scalar(2) * s.x);
                             return Outcome::check(p.contains(s.x), Witness{}.bind("x", s.x));
                         }};
    const auto samples = sample_stream(SampleConfig{}, FieldTag::RealRationals, 2);
    const auto r = evaluate_item(unit, samples, Exec::serial);
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_FALSE(r.witnesses.empty());
}
