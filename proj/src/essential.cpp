#include "hvs/essential.hpp"

#include <algorithm>

namespace hvs {

bool EssentialSet::contains(const Vector& v) const
{
    return std::find(points.begin(), points.end(), v) != points.end();
}

std::string EssentialSet::points_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out += ", ";
        out += points[i].to_string();
    }
    return out + "}";
}

std::string EssentialSet::to_string() const
{
    return points_string() + (complete ? " (complete)" : " (incomplete)");
}

bool is_essential(const ModelSpec& model, const Scalar& a, const Vector& x, const Vector& e)
{
    if (a.is_zero()) return e.is_zero();
    return product(model, a, x).contains(e) && product(model, a.inverse(), e).contains(x);
}

EssentialSet essential_points(const ModelSpec& model, const Scalar& a, const Vector& x, std::size_t depth,
                              EssentialSolver solver)
{
    require_compatible(model, x);
    if (a.is_zero()) return {{Vector::zero(model.dim)}, true};

    const HyperSet ax = product(model, a, x);
    if (solver == EssentialSolver::closed_form && model.family == Family::Geometric) {
        // a x r^k lies in a o x, and a^-1 o (a x r^k) = { x r^(k+j) } holds x only for k = 0.
        return {{a * x}, true};
    }

    const Scalar inv = a.inverse();
    EssentialSet out{{}, ax.is_finite()};
    for (auto& e : ax.enumerate(depth))
        if (product(model, inv, e).contains(x)) out.points.push_back(std::move(e));
    return out;
}

// ---------------------------------------------------------------------------
// lemma_basic

std::vector<ItemCheck> lemma_basic_items(const ModelSpec& model, std::size_t depth)
{
    std::vector<ItemCheck> items;

    items.push_back({"unit_essential", "x in E(1 o x)", [=](const Sample& s) {
                         const auto E = essential_points(model, Scalar(1), s.x, depth);
                         return Outcome::check(E.contains(s.x), Witness{}
                                                                    .bind("x", s.x)
                                                                    .bind("E(1 o x)", E.points_string())
                                                                    .with_relation("x not in E(1 o x)"));
                     }});

    items.push_back({"essential_absorption", "b != 0 => a o e = (ab) o x for e in E(b o x)", [=](const Sample& s) {
                         if (s.b.is_zero()) return Outcome::skip();
                         const auto rhs = product(model, s.a * s.b, s.x);
                         for (const auto& e : essential_points(model, s.b, s.x, depth).points) {
                             const auto lhs = product(model, s.a, e);
                             if (!set_equal(lhs, rhs))
                                 return Outcome::fail(Witness{}
                                                          .bind("a", s.a)
                                                          .bind("b", s.b)
                                                          .bind("x", s.x)
                                                          .bind("e", e)
                                                          .bind("a o e", lhs)
                                                          .bind("(ab) o x", rhs)
                                                          .with_relation("a o e != (ab) o x"));
                         }
                         return Outcome::pass();
                     }});

    items.push_back({"essential_negation", "E((-a) o x) = -E(a o x)", [=](const Sample& s) {
                         const auto neg = essential_points(model, -s.a, s.x, depth);
                         const auto pos = essential_points(model, s.a, s.x, depth);
                         bool equal = neg.points.size() == pos.points.size();
                         for (const auto& e : pos.points) equal = equal && neg.contains(-e);
                         return Outcome::check(equal, Witness{}
                                                          .bind("a", s.a)
                                                          .bind("x", s.x)
                                                          .bind("E((-a) o x)", neg.points_string())
                                                          .bind("E(a o x)", pos.points_string())
                                                          .with_relation("E((-a) o x) != -E(a o x)"));
                     }});

    items.push_back({"essential_preimage", "a != 0 => x in E(a o y) for some y", [=](const Sample& s) {
                         if (s.a.is_zero()) return Outcome::skip();
                         const auto pre = essential_points(model, s.a.inverse(), s.x, depth);
                         if (pre.points.empty())
                             return Outcome::fail(Witness{}
                                                      .bind("a", s.a)
                                                      .bind("x", s.x)
                                                      .with_relation("E(a^-1 o x) is empty"));
                         for (const auto& y : pre.points) {
                             const auto E = essential_points(model, s.a, y, depth);
                             if (!E.contains(s.x))
                                 return Outcome::fail(Witness{}
                                                          .bind("a", s.a)
                                                          .bind("x", s.x)
                                                          .bind("y", y)
                                                          .bind("E(a o y)", E.points_string())
                                                          .with_relation("x not in E(a o y) for y in E(a^-1 o x)"));
                         }
                         return Outcome::pass();
                     }});

    items.push_back({"normal_singleton", "normal => E(a o x) is a singleton", [=](const Sample& s) {
                         const auto E = essential_points(model, s.a, s.x, depth);
                         return Outcome::check(E.singleton(), Witness{}
                                                                  .bind("a", s.a)
                                                                  .bind("x", s.x)
                                                                  .bind("E(a o x)", E.points_string())
                                                                  .with_relation("E(a o x) has " +
                                                                                 std::to_string(E.points.size()) +
                                                                                 " elements"));
                     }});
    return items;
}

CheckReport check_lemma_basic(const ModelSpec& model, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    auto report = evaluate_suite("lemma_basic", lemma_basic_items(model, cfg.depth), samples, cfg.exec);
    if (!check_strong_normal(model, cfg).all_pass()) mark_vacuous(report.items.back());
    return report;
}

// ---------------------------------------------------------------------------
// normality

namespace {

// Sum of one choice from each set, over all choices.
std::vector<Vector> choice_sums(const EssentialSet& e1, const EssentialSet& e2)
{
    std::vector<Vector> out;
    for (const auto& u : e1.points)
        for (const auto& v : e2.points) out.push_back(u + v);
    return out;
}

Outcome weak_additivity(const EssentialSet& e1, const EssentialSet& e2, const EssentialSet& target, Witness w,
                        const std::string& lhs, const std::string& rhs)
{
    for (const auto& sum : choice_sums(e1, e2))
        if (target.contains(sum)) return Outcome::pass();
    return Outcome::fail(std::move(w)
                             .bind(lhs, e1.points_string())
                             .bind(rhs, e2.points_string())
                             .bind("E(target)", target.points_string())
                             .with_relation("sumset misses E(target)"));
}

Outcome strong_additivity(const EssentialSet& e1, const EssentialSet& e2, const EssentialSet& target, Witness w)
{
    for (const auto& u : e1.points) {
        for (const auto& v : e2.points) {
            const Vector sum = u + v;
            if (!target.contains(sum))
                return Outcome::fail(std::move(w)
                                         .bind("e1", u)
                                         .bind("e2", v)
                                         .bind("e1 + e2", sum)
                                         .bind("E(target)", target.points_string())
                                         .with_relation("e1 + e2 not in E(target)"));
        }
    }
    if (e1.complete && e2.complete && target.complete) {
        const auto sums = choice_sums(e1, e2);
        for (const auto& t : target.points) {
            if (std::find(sums.begin(), sums.end(), t) == sums.end())
                return Outcome::fail(std::move(w)
                                         .bind("t", t)
                                         .bind("E(target)", target.points_string())
                                         .with_relation("t in E(target) is not a sum of essential points"));
        }
    }
    return Outcome::pass();
}

}  // namespace

std::vector<ItemCheck> weak_normal_items(const ModelSpec& model, std::size_t depth)
{
    return {
        {"scalar_additivity", "(E(a o x) + E(b o x)) ∩ E((a+b) o x) != {}",
         [=](const Sample& s) {
             return weak_additivity(essential_points(model, s.a, s.x, depth),
                                    essential_points(model, s.b, s.x, depth),
                                    essential_points(model, s.a + s.b, s.x, depth),
                                    Witness{}.bind("a", s.a).bind("b", s.b).bind("x", s.x), "E(a o x)", "E(b o x)");
         }},
        {"vector_additivity", "(E(a o x) + E(a o y)) ∩ E(a o (x+y)) != {}",
         [=](const Sample& s) {
             return weak_additivity(essential_points(model, s.a, s.x, depth),
                                    essential_points(model, s.a, s.y, depth),
                                    essential_points(model, s.a, s.x + s.y, depth),
                                    Witness{}.bind("a", s.a).bind("x", s.x).bind("y", s.y), "E(a o x)", "E(a o y)");
         }},
    };
}

std::vector<ItemCheck> strong_normal_items(const ModelSpec& model, std::size_t depth)
{
    return {
        {"scalar_additivity", "e(a o x) + e(b o x) = e((a+b) o x) for every choice",
         [=](const Sample& s) {
             return strong_additivity(essential_points(model, s.a, s.x, depth),
                                      essential_points(model, s.b, s.x, depth),
                                      essential_points(model, s.a + s.b, s.x, depth),
                                      Witness{}.bind("a", s.a).bind("b", s.b).bind("x", s.x));
         }},
        {"vector_additivity", "e(a o x) + e(a o y) = e(a o (x+y)) for every choice",
         [=](const Sample& s) {
             return strong_additivity(essential_points(model, s.a, s.x, depth),
                                      essential_points(model, s.a, s.y, depth),
                                      essential_points(model, s.a, s.x + s.y, depth),
                                      Witness{}.bind("a", s.a).bind("x", s.x).bind("y", s.y));
         }},
    };
}

CheckReport check_weak_normal(const ModelSpec& model, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    return evaluate_suite("weak_normal", weak_normal_items(model, cfg.depth), samples, cfg.exec);
}

CheckReport check_strong_normal(const ModelSpec& model, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    return evaluate_suite("strong_normal", strong_normal_items(model, cfg.depth), samples, cfg.exec);
}

std::string normality_verdict(const CheckReport& weak, const CheckReport& strong)
{
    return weak.all_pass() == strong.all_pass() ? "consistent" : "readings disagree";
}

CheckReport check_normal_equivalence(const ModelSpec& model, const SampleConfig& cfg)
{
    const auto weak = check_weak_normal(model, cfg);
    const auto strong = check_strong_normal(model, cfg);
    const std::string verdict = normality_verdict(weak, strong);

    ItemReport item{"equivalence", "intersection normality <=> every-choice additivity", Status::pass, cfg.samples, {}};
    if (verdict != "consistent") {
        item.status = Status::fail;
        const auto& failing = weak.all_pass() ? strong : weak;
        Witness w;
        w.bind("weak", weak.all_pass() ? "pass" : "fail");
        w.bind("strong", strong.all_pass() ? "pass" : "fail");
        for (const auto& it : failing.items) {
            if (it.witnesses.empty()) continue;
            w.bind("item", failing.suite + "/" + it.id);
            for (const auto& b : it.witnesses.front().bindings) w.bindings.push_back(b);
            break;
        }
        item.witnesses.push_back(w.with_relation(verdict));
    }
    return {{}, "normal_equiv", {std::move(item)}};
}

}  // namespace hvs
