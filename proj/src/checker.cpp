#include "hvs/checker.hpp"

#include <algorithm>
#include <exception>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hvs {

namespace {

class Draw {
public:
    Draw(std::uint64_t seed, long height) : engine_(seed), height_(height) {}

    long range(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    Rational rational()
    {
        const long num = range(-height_, height_);  // sequenced: argument order is unspecified
        const long den = range(1, height_);
        return Rational(num, den);
    }

    Scalar scalar(FieldTag field)
    {
        Rational re = rational();
        Rational im = rational();  // drawn for both fields so streams line up
        if (field == FieldTag::RealRationals) return Scalar(std::move(re));
        return Scalar(std::move(re), std::move(im));
    }

    Vector vector(FieldTag field, std::size_t dim)
    {
        std::vector<Scalar> coords;
        coords.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) coords.push_back(scalar(field));
        return Vector(std::move(coords));
    }

private:
    std::mt19937_64 engine_;
    long height_;
};

}  // namespace

std::vector<Sample> sample_stream(const SampleConfig& cfg, FieldTag field, std::size_t dim)
{
    if (cfg.height < 1) throw ShapeError("sample height must be positive");
    Draw draw(cfg.seed, cfg.height);
    const Scalar forced[3] = {Scalar(0), Scalar(1), Scalar(-1)};

    std::vector<Sample> out;
    out.reserve(cfg.samples);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Sample s;
        s.a = draw.scalar(field);
        s.b = draw.scalar(field);
        s.x = draw.vector(field, dim);
        s.y = draw.vector(field, dim);
        s.z = draw.vector(field, dim);
        if (i < 9) {
            s.a = forced[i / 3];
            s.b = forced[i % 3];
        }
        if (i < 12) {
            switch (i % 4) {
            case 0: s.x = Vector::zero(dim); break;
            case 1: s.y = Vector::zero(dim); break;
            case 2: s.y = s.x; break;
            case 3: s.y = -s.x; break;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------

const std::string* Witness::find(std::string_view name) const
{
    for (const auto& [k, v] : bindings)
        if (k == name) return &v;
    return nullptr;
}

std::string Witness::to_string() const
{
    std::string out;
    for (const auto& [k, v] : bindings) {
        if (!out.empty()) out += ", ";
        out += k + " = " + v;
    }
    if (!relation.empty()) out += (out.empty() ? "" : "; ") + relation;
    return out;
}

Sample replay_sample(const Witness& w, const ModelSpec& model)
{
    auto scalar = [&w](std::string_view name) {
        const auto* v = w.find(name);
        return v ? Scalar::parse(*v) : Scalar(0);
    };
    auto vector = [&w, &model](std::string_view name) {
        const auto* v = w.find(name);
        return v ? Vector::parse(*v) : Vector::zero(model.dim);
    };
    return Sample{scalar("a"), scalar("b"), vector("x"), vector("y"), vector("z")};
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    case Status::unbounded: return "unbounded";
    }
    return "?";
}

const ItemReport* CheckReport::item(std::string_view id) const
{
    for (const auto& it : items)
        if (it.id == id) return &it;
    return nullptr;
}

Status CheckReport::summary() const
{
    auto has = [this](Status s) {
        return std::any_of(items.begin(), items.end(), [s](const ItemReport& i) { return i.status == s; });
    };
    if (has(Status::fail)) return Status::fail;
    if (has(Status::unbounded)) return Status::unbounded;
    if (has(Status::pass)) return Status::pass;
    return Status::vacuous;
}

bool CheckReport::ok() const
{
    const Status s = summary();
    return s == Status::pass || s == Status::vacuous;
}

bool CheckReport::all_pass() const
{
    return std::all_of(items.begin(), items.end(), [](const ItemReport& i) { return i.status == Status::pass; });
}

// ---------------------------------------------------------------------------
// Kernels

std::vector<Outcome> evaluate_serial(const ItemCheck& check, std::span<const Sample> samples)
{
    std::vector<Outcome> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(check.eval(s));
    return out;
}

std::vector<Outcome> evaluate_parallel(const ItemCheck& check, std::span<const Sample> samples)
{
    const auto n = static_cast<long>(samples.size());
    std::vector<Outcome> out(samples.size());
    std::vector<std::exception_ptr> errors(samples.size());

#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = check.eval(samples[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

ItemReport summarize(const ItemCheck& check, std::span<const Outcome> outcomes)
{
    ItemReport r{check.id, check.anchor, Status::pass, 0, {}};
    std::vector<const Outcome*> unbounded;
    for (const auto& o : outcomes) {
        switch (o.kind) {
        case Outcome::Kind::skip: continue;
        case Outcome::Kind::pass: break;
        case Outcome::Kind::fail:
            r.status = Status::fail;
            if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(o.witness);
            break;
        case Outcome::Kind::unbounded:
            if (unbounded.size() < kMaxWitnesses) unbounded.push_back(&o);
            break;
        }
        ++r.samples;
    }
    if (r.status != Status::fail && !unbounded.empty()) {
        r.status = Status::unbounded;
        for (const auto* o : unbounded) r.witnesses.push_back(o->witness);
    }
    if (r.samples == 0) r.status = Status::vacuous;
    return r;
}

ItemReport evaluate_item(const ItemCheck& check, std::span<const Sample> samples, Exec exec)
{
    const auto outcomes = exec == Exec::parallel ? evaluate_parallel(check, samples) : evaluate_serial(check, samples);
    return summarize(check, outcomes);
}

CheckReport evaluate_suite(std::string suite, const std::vector<ItemCheck>& items,
                           std::span<const Sample> samples, Exec exec)
{
    CheckReport report{{}, std::move(suite), {}};
    for (const auto& item : items) report.items.push_back(evaluate_item(item, samples, exec));
    return report;
}

void mark_vacuous(ItemReport& item)
{
    if (item.status == Status::unbounded) return;
    item.status = Status::vacuous;
    item.witnesses.clear();
}

void mark_vacuous(CheckReport& report)
{
    for (auto& item : report.items) mark_vacuous(item);
}

}  // namespace hvs
