#include "hvs/inner.hpp"

#include <algorithm>

#include "hvs/essential.hpp"

namespace hvs {

void InnerProductSpec::validate(std::size_t dim) const
{
    if (kind == Kind::Dot) return;
    if (weights.size() != dim)
        throw ShapeError("weighted_dot has " + std::to_string(weights.size()) + " weights, model dimension is " +
                         std::to_string(dim));
    for (const auto& w : weights)
        if (w.sign() <= 0) throw ShapeError("weighted_dot weights must be positive, got " + w.to_string());
}

std::string InnerProductSpec::to_string() const
{
    if (kind == Kind::Dot) return "dot";
    std::string out = "weighted_dot(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ", ";
        out += weights[i].to_string();
    }
    return out + ")";
}

Scalar pairing(const InnerProductSpec& ip, const Vector& x, const Vector& y)
{
    if (x.dim() != y.dim()) throw ShapeError("pairing of vectors with different dimensions");
    if (ip.kind == InnerProductSpec::Kind::WeightedDot && ip.weights.size() != x.dim())
        throw ShapeError("weighted_dot weight count does not match vector dimension");
    Scalar sum(0);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Scalar term = x[i] * y[i].conjugate();
        if (ip.kind == InnerProductSpec::Kind::WeightedDot) term *= Scalar(ip.weights[i]);
        sum += term;
    }
    return sum;
}

NormSq norm_sq(const InnerProductSpec& ip, const Vector& x)
{
    return {pairing(ip, x, x).as_real()};
}

std::string SupResult::to_string() const
{
    if (!bounded) return "+inf (unbounded)";
    if (attained && witness) return value.to_string() + " (attained at " + witness->to_string() + ")";
    return value.to_string() + (attained ? " (attained)" : " (not attained)");
}

namespace {

// Supremum of value(z) over s. On a ray, value(base * r^k) = value(base) * rho^k
// where rho = r for linear functionals and r^2 for quadratic ones.
template <class F>
SupResult sup_over(const HyperSet& s, F value, bool quadratic)
{
    if (const auto* ray = std::get_if<GeometricRay>(&s.shape())) {
        const Rational c = value(ray->base);
        const Rational rho = quadratic ? ray->ratio * ray->ratio : ray->ratio;
        if (rho < Rational(1)) {
            if (c.sign() >= 0) return {true, c, true, ray->base};
            return {true, Rational(0), false, std::nullopt};  // c * rho^k increases to 0
        }
        if (c.sign() > 0) return SupResult::unbounded();
        return {true, c, true, ray->base};
    }
    SupResult best{true, Rational(0), true, std::nullopt};
    for (auto& z : s.enumerate(1)) {
        Rational v = value(z);
        if (!best.witness || v > best.value) {
            best.value = std::move(v);
            best.witness = std::move(z);
        }
    }
    return best;
}

}  // namespace

SupResult sup_pairing(const ModelSpec& model, const InnerProductSpec& ip, const Scalar& a, const Vector& x,
                      const Vector& y)
{
    if (model.field != FieldTag::RealRationals) throw DomainError("sup of pairings requires field Q");
    require_compatible(model, y);
    return sup_over(
        product(model, a, x), [&](const Vector& z) { return pairing(ip, z, y).as_real(); }, false);
}

SupResult sup_norm_sq(const ModelSpec& model, const InnerProductSpec& ip, const Scalar& a, const Vector& x)
{
    return sup_over(
        product(model, a, x), [&](const Vector& u) { return norm_sq(ip, u).value; }, true);
}

// ---------------------------------------------------------------------------
// Shared axiom items

namespace {

ItemCheck positivity_item(const InnerProductSpec& ip)
{
    return {"positivity", "(x,x) > 0 for x != 0", [=](const Sample& s) {
                if (s.x.is_zero()) return Outcome::skip();
                const Scalar xx = pairing(ip, s.x, s.x);
                return Outcome::check(xx.is_real() && xx.re().sign() > 0,
                                      Witness{}.bind("x", s.x).bind("(x,x)", xx).with_relation("(x,x) is not > 0"));
            }};
}

ItemCheck definiteness_item(const InnerProductSpec& ip)
{
    return {"definiteness", "(x,x) = 0 <=> x = 0", [=](const Sample& s) {
                const Scalar xx = pairing(ip, s.x, s.x);
                return Outcome::check(xx.is_zero() == s.x.is_zero(), Witness{}
                                                                          .bind("x", s.x)
                                                                          .bind("(x,x)", xx)
                                                                          .with_relation("(x,x) = 0 disagrees with x = 0"));
            }};
}

ItemCheck additivity_item(const InnerProductSpec& ip)
{
    return {"additivity", "(x+y,z) = (x,z) + (y,z)", [=](const Sample& s) {
                const Scalar lhs = pairing(ip, s.x + s.y, s.z);
                const Scalar rhs = pairing(ip, s.x, s.z) + pairing(ip, s.y, s.z);
                return Outcome::check(lhs == rhs, Witness{}
                                                      .bind("x", s.x)
                                                      .bind("y", s.y)
                                                      .bind("z", s.z)
                                                      .bind("(x+y,z)", lhs)
                                                      .bind("(x,z)+(y,z)", rhs)
                                                      .with_relation("(x+y,z) != (x,z) + (y,z)"));
            }};
}

ItemCheck symmetry_item(const InnerProductSpec& ip, std::string id, std::string anchor)
{
    return {std::move(id), std::move(anchor), [=](const Sample& s) {
                const Scalar xy = pairing(ip, s.x, s.y);
                const Scalar yx = pairing(ip, s.y, s.x);
                return Outcome::check(yx == xy.conjugate(), Witness{}
                                                                .bind("x", s.x)
                                                                .bind("y", s.y)
                                                                .bind("(x,y)", xy)
                                                                .bind("(y,x)", yx)
                                                                .with_relation("(y,x) != conj((x,y))"));
            }};
}

}  // namespace

// ---------------------------------------------------------------------------
// Real sup-based inner product

std::vector<ItemCheck> real_ip_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth)
{
    std::vector<ItemCheck> items{positivity_item(ip), definiteness_item(ip), additivity_item(ip),
                                 symmetry_item(ip, "symmetry", "(y,x) = (x,y)")};

    items.push_back({"sup_homogeneity", "sup (a o x, y) = a(x,y)", [=](const Sample& s) {
                         const SupResult sup = sup_pairing(model, ip, s.a, s.x, s.y);
                         const Scalar target = s.a * pairing(ip, s.x, s.y);
                         Witness w = Witness{}.bind("a", s.a).bind("x", s.x).bind("y", s.y);
                         if (!sup.bounded)
                             return Outcome::unbounded(w.bind("sup(a o x, y)", sup.to_string())
                                                           .bind("a(x,y)", target)
                                                           .with_relation("sup(a o x, y) is unbounded"));
                         return Outcome::check(Scalar(sup.value) == target,
                                               w.bind("sup(a o x, y)", sup.to_string())
                                                   .bind("a(x,y)", target)
                                                   .with_relation("sup(a o x, y) = " + sup.value.to_string() +
                                                                  " != a(x,y) = " + target.to_string()));
                     }});

    items.push_back({"sup_at_essential", "sup (a o x, y) = (e(a o x), y)", [=](const Sample& s) {
                         const SupResult sup = sup_pairing(model, ip, s.a, s.x, s.y);
                         Witness w = Witness{}.bind("a", s.a).bind("x", s.x).bind("y", s.y);
                         if (!sup.bounded)
                             return Outcome::unbounded(w.with_relation("sup(a o x, y) is unbounded"));
                         for (const auto& e : essential_points(model, s.a, s.x, depth).points) {
                             const Scalar ey = pairing(ip, e, s.y);
                             if (ey != Scalar(sup.value))
                                 return Outcome::fail(w.bind("e", e)
                                                          .bind("sup(a o x, y)", sup.to_string())
                                                          .bind("(e,y)", ey)
                                                          .with_relation("sup(a o x, y) != (e, y)"));
                         }
                         return Outcome::pass();
                     }});
    return items;
}

CheckReport check_real_ip_axioms(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg)
{
    const auto items = real_ip_items(model, ip, cfg.depth);
    if (model.field != FieldTag::RealRationals) {
        CheckReport report{{}, "real_ip", {}};
        for (const auto& it : items) report.items.push_back({it.id, it.anchor, Status::vacuous, 0, {}});
        return report;
    }
    const auto samples = sample_stream(cfg, model.field, model.dim);
    auto report = evaluate_suite("real_ip", items, samples, cfg.exec);
    const bool axioms_hold = std::all_of(report.items.begin(), report.items.end() - 1,
                                         [](const ItemReport& i) { return i.status == Status::pass; });
    if (!axioms_hold) mark_vacuous(report.items.back());
    return report;
}

// ---------------------------------------------------------------------------
// Hyperinner product

std::vector<ItemCheck> hip_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth)
{
    std::vector<ItemCheck> items{positivity_item(ip), definiteness_item(ip), additivity_item(ip),
                                 symmetry_item(ip, "conjugate_symmetry", "(y,x) = conj((x,y))")};

    items.push_back({"essential_homogeneity", "(e(a o x), y) = a(x,y)", [=](const Sample& s) {
                         const Scalar target = s.a * pairing(ip, s.x, s.y);
                         for (const auto& e : essential_points(model, s.a, s.x, depth).points) {
                             const Scalar ey = pairing(ip, e, s.y);
                             if (ey != target)
                                 return Outcome::fail(Witness{}
                                                          .bind("a", s.a)
                                                          .bind("x", s.x)
                                                          .bind("y", s.y)
                                                          .bind("e", e)
                                                          .bind("(e,y)", ey)
                                                          .bind("a(x,y)", target)
                                                          .with_relation("(e,y) = " + ey.to_string() +
                                                                         " != a(x,y) = " + target.to_string()));
                         }
                         return Outcome::pass();
                     }});

    items.push_back({"unit_contraction", "(u,u) <= (x,x) for u in 1 o x", [=](const Sample& s) {
                         const Rational xx = norm_sq(ip, s.x).value;
                         auto fail = [&](const Vector& u, const std::string& uu) {
                             return Outcome::fail(Witness{}
                                                      .bind("x", s.x)
                                                      .bind("u", u)
                                                      .bind("(u,u)", uu)
                                                      .bind("(x,x)", xx)
                                                      .with_relation("(u,u) > (x,x)"));
                         };
                         const HyperSet one_x = product(model, Scalar(1), s.x);
                         for (const auto& u : one_x.enumerate(depth)) {
                             const Rational uu = norm_sq(ip, u).value;
                             if (uu > xx) return fail(u, uu.to_string());
                         }
                         const SupResult sup = sup_norm_sq(model, ip, Scalar(1), s.x);
                         if (!sup.bounded) return fail(s.x, "unbounded over 1 o x");
                         if (sup.value > xx) return fail(sup.witness.value_or(s.x), sup.value.to_string());
                         return Outcome::pass();
                     }});
    return items;
}

CheckReport check_hip_axioms(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    return evaluate_suite("hip", hip_items(model, ip, cfg.depth), samples, cfg.exec);
}

// ---------------------------------------------------------------------------
// Derived identities

std::vector<ItemCheck> lemma_34_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth)
{
    std::vector<ItemCheck> items;

    items.push_back({"zero_pairing", "(0,x) = (x,0) = 0", [=](const Sample& s) {
                         const Vector zero = Vector::zero(model.dim);
                         const Scalar l = pairing(ip, zero, s.x);
                         const Scalar r = pairing(ip, s.x, zero);
                         return Outcome::check(l.is_zero() && r.is_zero(), Witness{}
                                                                               .bind("x", s.x)
                                                                               .bind("(0,x)", l)
                                                                               .bind("(x,0)", r)
                                                                               .with_relation("pairing with 0 is nonzero"));
                     }});

    items.push_back({"negation_pairing", "(-x,y) = (x,-y) = -(x,y)", [=](const Sample& s) {
                         const Scalar xy = pairing(ip, s.x, s.y);
                         const Scalar l = pairing(ip, -s.x, s.y);
                         const Scalar r = pairing(ip, s.x, -s.y);
                         return Outcome::check(l == -xy && r == -xy, Witness{}
                                                                         .bind("x", s.x)
                                                                         .bind("y", s.y)
                                                                         .bind("(-x,y)", l)
                                                                         .bind("(x,-y)", r)
                                                                         .bind("(x,y)", xy)
                                                                         .with_relation("negation does not factor out"));
                     }});

    items.push_back({"conjugate_homogeneity", "(x, e(a o y)) = conj(a)(x,y)", [=](const Sample& s) {
                         const Scalar target = s.a.conjugate() * pairing(ip, s.x, s.y);
                         for (const auto& e : essential_points(model, s.a, s.y, depth).points) {
                             const Scalar xe = pairing(ip, s.x, e);
                             if (xe != target)
                                 return Outcome::fail(Witness{}
                                                          .bind("a", s.a)
                                                          .bind("x", s.x)
                                                          .bind("y", s.y)
                                                          .bind("e", e)
                                                          .bind("(x,e)", xe)
                                                          .bind("conj(a)(x,y)", target)
                                                          .with_relation("(x,e) != conj(a)(x,y)"));
                         }
                         return Outcome::pass();
                     }});

    items.push_back({"product_bound", "(u,u) <= |a|^2 (x,x) for u in a o x", [=](const Sample& s) {
                         const Rational bound = s.a.abs2() * norm_sq(ip, s.x).value;
                         Witness w = Witness{}.bind("a", s.a).bind("x", s.x);
                         for (const auto& u : product(model, s.a, s.x).enumerate(depth)) {
                             const Rational uu = norm_sq(ip, u).value;
                             if (uu > bound)
                                 return Outcome::fail(w.bind("u", u)
                                                          .bind("(u,u)", uu)
                                                          .bind("|a|^2 (x,x)", bound)
                                                          .with_relation("(u,u) > |a|^2 (x,x)"));
                         }
                         const SupResult sup = sup_norm_sq(model, ip, s.a, s.x);
                         if (!sup.bounded)
                             return Outcome::unbounded(w.with_relation("sup (u,u) over a o x is unbounded"));
                         return Outcome::check(sup.value <= bound, w.bind("sup (u,u)", sup.to_string())
                                                                       .bind("|a|^2 (x,x)", bound)
                                                                       .with_relation("sup (u,u) > |a|^2 (x,x)"));
                     }});
    return items;
}

CheckReport check_lemma_34(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    auto report = evaluate_suite("lemma_34", lemma_34_items(model, ip, cfg.depth), samples, cfg.exec);
    if (!check_hip_axioms(model, ip, cfg).all_pass()) mark_vacuous(report);
    return report;
}

// ---------------------------------------------------------------------------
// Normality from an inner product

CheckReport check_theorem_normal(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    const std::size_t depth = cfg.depth;
    const ItemCheck singleton{"singleton_essential", "hyperinner product => E(a o x) is a singleton",
                              [=](const Sample& s) {
                                  for (const auto& [a, x] : {std::pair{s.a, s.x}, std::pair{s.b, s.y}}) {
                                      const auto E = essential_points(model, a, x, depth);
                                      if (!E.singleton())
                                          return Outcome::fail(Witness{}
                                                                   .bind("a", a)
                                                                   .bind("x", x)
                                                                   .bind("E(a o x)", E.points_string())
                                                                   .with_relation("contradiction: E(a o x) has " +
                                                                                  std::to_string(E.points.size()) +
                                                                                  " elements"));
                                  }
                                  return Outcome::pass();
                              }};

    CheckReport report{{}, "theorem_normal", {}};
    report.items.push_back(evaluate_item(singleton, samples, cfg.exec));

    const CheckReport strong = check_strong_normal(model, cfg);
    ItemReport normal{"strong_normality", "hyperinner product => every-choice additivity", Status::pass,
                      samples.size(), {}};
    for (const auto& it : strong.items) {
        if (it.status == Status::pass) continue;
        normal.status = Status::fail;
        for (auto w : it.witnesses) {
            if (normal.witnesses.size() >= kMaxWitnesses) break;
            w.relation = "contradiction: " + w.relation;
            normal.witnesses.push_back(std::move(w));
        }
    }
    report.items.push_back(std::move(normal));

    if (!check_hip_axioms(model, ip, cfg).all_pass()) mark_vacuous(report);
    return report;
}

// ---------------------------------------------------------------------------
// Derived norm

std::vector<ItemCheck> norm_items(const ModelSpec& model, const InnerProductSpec& ip, std::size_t depth)
{
    std::vector<ItemCheck> items;

    items.push_back({"definiteness", "f(x) = 0 <=> x = 0", [=](const Sample& s) {
                         const Rational f2 = norm_sq(ip, s.x).value;
                         return Outcome::check(f2.is_zero() == s.x.is_zero(),
                                               Witness{}.bind("x", s.x).bind("f(x)^2", f2).with_relation(
                                                   "f(x) = 0 disagrees with x = 0"));
                     }});

    items.push_back({"cauchy_schwarz", "|(x,y)| <= f(x) f(y)", [=](const Sample& s) {
                         const Scalar xy = pairing(ip, s.x, s.y);
                         const Rational lhs = xy.abs2();
                         const Rational rhs = norm_sq(ip, s.x).value * norm_sq(ip, s.y).value;
                         return Outcome::check(lhs <= rhs, Witness{}
                                                               .bind("x", s.x)
                                                               .bind("y", s.y)
                                                               .bind("|(x,y)|^2", lhs)
                                                               .bind("f(x)^2 f(y)^2", rhs)
                                                               .with_relation("|(x,y)|^2 > f(x)^2 f(y)^2"));
                     }});

    items.push_back({"triangle", "f(x+y) <= f(x) + f(y)", [=](const Sample& s) {
                         // f(x+y) <= f(x) + f(y)  <=>  (f(x+y)^2 - f(x)^2 - f(y)^2) / 2 <= sqrt(f(x)^2 f(y)^2)
                         const Rational fx = norm_sq(ip, s.x).value;
                         const Rational fy = norm_sq(ip, s.y).value;
                         const Rational fxy = norm_sq(ip, s.x + s.y).value;
                         const Rational cross = (fxy - fx - fy) / Rational(2);
                         return Outcome::check(leq_sqrt_product(cross, fx, fy), Witness{}
                                                                                    .bind("x", s.x)
                                                                                    .bind("y", s.y)
                                                                                    .bind("f(x+y)^2", fxy)
                                                                                    .bind("f(x)^2", fx)
                                                                                    .bind("f(y)^2", fy)
                                                                                    .with_relation("f(x+y) > f(x) + f(y)"));
                     }});

    items.push_back({"essential_scaling", "f(e(a o x)) = |a| f(x)", [=](const Sample& s) {
                         const Rational target = s.a.abs2() * norm_sq(ip, s.x).value;
                         for (const auto& e : essential_points(model, s.a, s.x, depth).points) {
                             const Rational fe = norm_sq(ip, e).value;
                             if (fe != target)
                                 return Outcome::fail(Witness{}
                                                          .bind("a", s.a)
                                                          .bind("x", s.x)
                                                          .bind("e", e)
                                                          .bind("f(e)^2", fe)
                                                          .bind("|a|^2 f(x)^2", target)
                                                          .with_relation("f(e)^2 != |a|^2 f(x)^2"));
                         }
                         return Outcome::pass();
                     }});

    items.push_back({"sup_scaling", "sup f(a o x) = |a| f(x)", [=](const Sample& s) {
                         // f >= 0, so sup f = |a| f(x) iff sup f^2 = |a|^2 f(x)^2.
                         const Rational target = s.a.abs2() * norm_sq(ip, s.x).value;
                         const SupResult sup = sup_norm_sq(model, ip, s.a, s.x);
                         Witness w = Witness{}.bind("a", s.a).bind("x", s.x);
                         if (!sup.bounded)
                             return Outcome::unbounded(w.bind("sup f(a o x)^2", sup.to_string())
                                                           .bind("|a|^2 f(x)^2", target)
                                                           .with_relation("sup f over a o x is unbounded"));
                         return Outcome::check(sup.value == target, w.bind("sup f(a o x)^2", sup.to_string())
                                                                        .bind("|a|^2 f(x)^2", target)
                                                                        .with_relation("sup f(a o x)^2 != |a|^2 f(x)^2"));
                     }});
    return items;
}

CheckReport check_norm_props(const ModelSpec& model, const InnerProductSpec& ip, const SampleConfig& cfg)
{
    const auto samples = sample_stream(cfg, model.field, model.dim);
    auto report = evaluate_suite("norm_props", norm_items(model, ip, cfg.depth), samples, cfg.exec);

    // A norm needs definiteness, the triangle inequality and sup scaling.
    ItemReport norm{"norm_axioms", "f is a norm: definite, subadditive, sup f(a o x) = |a| f(x)", Status::pass,
                    samples.size(), {}};
    bool unbounded = false;
    for (const char* id : {"definiteness", "triangle", "sup_scaling"}) {
        const ItemReport* it = report.item(id);
        if (it->status == Status::fail) {
            norm.status = Status::fail;
            for (const auto& w : it->witnesses)
                if (norm.witnesses.size() < kMaxWitnesses) norm.witnesses.push_back(w);
        }
        unbounded = unbounded || it->status == Status::unbounded;
    }
    if (norm.status != Status::fail && unbounded) {
        norm.status = Status::unbounded;
        norm.witnesses = report.item("sup_scaling")->witnesses;
    }
    report.items.push_back(std::move(norm));

    if (!check_hip_axioms(model, ip, cfg).all_pass()) mark_vacuous(report);
    return report;
}

}  // namespace hvs
