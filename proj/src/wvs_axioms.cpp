#include "hvs/wvs_axioms.hpp"

namespace hvs {

std::vector<ItemCheck> wvs_axiom_items(const ModelSpec& model, std::size_t depth)
{
    const std::string up_to = " up to depth " + std::to_string(depth);
    std::vector<ItemCheck> items;

    items.push_back({"right_distributive", "a o (x+y) ∩ (a o x + a o y) != {}", [=](const Sample& s) {
                         const auto target = product(model, s.a, s.x + s.y);
                         const auto sums = sumset(product(model, s.a, s.x), product(model, s.a, s.y), depth);
                         if (intersect_nonempty(target, sums, depth)) return Outcome::pass();
                         return Outcome::fail(Witness{}
                                                  .bind("a", s.a)
                                                  .bind("x", s.x)
                                                  .bind("y", s.y)
                                                  .bind("a o (x+y)", target)
                                                  .with_relation("no common element" + up_to));
                     }});

    items.push_back({"left_distributive", "(a+b) o x ∩ (a o x + b o x) != {}", [=](const Sample& s) {
                         const auto target = product(model, s.a + s.b, s.x);
                         const auto sums = sumset(product(model, s.a, s.x), product(model, s.b, s.x), depth);
                         if (intersect_nonempty(target, sums, depth)) return Outcome::pass();
                         return Outcome::fail(Witness{}
                                                  .bind("a", s.a)
                                                  .bind("b", s.b)
                                                  .bind("x", s.x)
                                                  .bind("(a+b) o x", target)
                                                  .with_relation("no common element" + up_to));
                     }});

    items.push_back({"associative", "a o (b o x) = (ab) o x", [=](const Sample& s) {
                         const auto lhs = product_of_set(model, s.a, product(model, s.b, s.x));
                         const auto rhs = product(model, s.a * s.b, s.x);
                         return Outcome::check(set_equal(lhs, rhs), Witness{}
                                                                       .bind("a", s.a)
                                                                       .bind("b", s.b)
                                                                       .bind("x", s.x)
                                                                       .bind("a o (b o x)", lhs)
                                                                       .bind("(ab) o x", rhs)
                                                                       .with_relation("a o (b o x) != (ab) o x"));
                     }});

    items.push_back({"negation", "a o (-x) = (-a) o x = -(a o x)", [=](const Sample& s) {
                         const auto p1 = product(model, s.a, -s.x);
                         const auto p2 = product(model, -s.a, s.x);
                         const auto p3 = product(model, s.a, s.x).negated();
                         return Outcome::check(set_equal(p1, p2) && set_equal(p2, p3),
                                               Witness{}
                                                   .bind("a", s.a)
                                                   .bind("x", s.x)
                                                   .bind("a o (-x)", p1)
                                                   .bind("(-a) o x", p2)
                                                   .bind("-(a o x)", p3)
                                                   .with_relation("the three sets differ"));
                     }});

    items.push_back({"unit", "x in 1 o x", [=](const Sample& s) {
                         const auto p = product(model, Scalar(1), s.x);
                         return Outcome::check(p.contains(s.x), Witness{}
                                                                    .bind("x", s.x)
                                                                    .bind("1 o x", p)
                                                                    .with_relation("x not in 1 o x"));
                     }});
    return items;
}

CheckReport check_wvs_axioms(const ModelSpec& model, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    return evaluate_suite("wvs_axioms", wvs_axiom_items(model, cfg.depth), samples, cfg.exec);
}

}  // namespace hvs
