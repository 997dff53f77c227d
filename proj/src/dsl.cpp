#include "hvs/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "hvs/suites.hpp"

namespace hvs::dsl {

SampleConfig effective_config(const CheckDirective& check, const ConfigOverrides& cli)
{
    SampleConfig cfg;
    cfg.seed = cli.seed.value_or(check.seed.value_or(cfg.seed));
    cfg.samples = cli.samples.value_or(check.samples.value_or(cfg.samples));
    cfg.height = cli.height.value_or(check.height.value_or(cfg.height));
    cfg.depth = cli.depth.value_or(check.depth.value_or(cfg.depth));
    return cfg;
}

std::string ParseDiagnostic::format(std::string_view filename) const
{
    std::string out = std::string(filename) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                      ": error: " + message + "\n";
    out += "    " + source_line + "\n";
    out += "    " + std::string(static_cast<std::size_t>(std::max(column - 1, 0)), ' ') + "^\n";
    return out;
}

namespace {

enum class Tok { ident, string, integer, punct, end, error };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::ident:
    case Tok::punct: return "'" + t.text + "'";
    case Tok::string: return "string \"" + t.text + "\"";
    case Tok::integer: return "integer " + t.text;
    case Tok::end: return "end of input";
    case Tok::error: return "invalid token";
    }
    return "?";
}

struct Failure {
    ParseDiagnostic diag;
};

std::string line_of(std::string_view text, int line)
{
    int current = 1;
    std::size_t start = 0;
    while (current < line) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) return {};
        start = nl + 1;
        ++current;
    }
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string out(text.substr(start, end - start));
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return out;
}

ParseDiagnostic make_diag(std::string_view text, ParseDiagnostic::Kind kind, SourcePos pos, std::string message,
                          std::vector<std::string> expected = {})
{
    return {kind, pos.line, pos.column, std::move(message), std::move(expected), line_of(text, pos.line)};
}

// ---------------------------------------------------------------------------
// Lexer

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        try {
            lex(out);
        } catch (const Failure& f) {
            // Surfaced when the parser reaches it, so an earlier syntax error wins.
            out.push_back({Tok::error, f.diag.message, {f.diag.line, f.diag.column}});
        }
        return out;
    }

private:
    void lex(std::vector<Token>& out)
    {
        while (true) {
            skip_space_and_comments();
            Token t;
            t.pos = {line_, col_};
            if (i_ >= text_.size()) {
                out.push_back(t);
                return;
            }
            const char c = text_[i_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::ident;
                while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                    t.text.push_back(advance());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Tok::integer;
                while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                    t.text.push_back(advance());
            } else if (c == '"') {
                t.kind = Tok::string;
                t.text = read_string(t.pos);
            } else if (std::string_view("{}(),/=").find(c) != std::string_view::npos) {
                t.kind = Tok::punct;
                t.text.push_back(advance());
            } else {
                throw Failure{make_diag(text_, ParseDiagnostic::Kind::syntax, t.pos,
                                        "unexpected character '" + std::string(1, c) + "'")};
            }
            out.push_back(std::move(t));
        }
    }

    char advance()
    {
        const char c = text_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments()
    {
        while (i_ < text_.size()) {
            const char c = text_[i_];
            if (c == '#') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string read_string(SourcePos start)
    {
        advance();  // opening quote
        std::string out;
        while (true) {
            if (i_ >= text_.size() || text_[i_] == '\n')
                throw Failure{make_diag(text_, ParseDiagnostic::Kind::syntax, start, "unterminated string")};
            const char c = advance();
            if (c == '"') return out;
            if (c == '\\') {
                const SourcePos esc{line_, col_ - 1};
                if (i_ >= text_.size() || (text_[i_] != '"' && text_[i_] != '\\'))
                    throw Failure{make_diag(text_, ParseDiagnostic::Kind::syntax, esc, "unknown escape in string")};
                out.push_back(advance());
                continue;
            }
            out.push_back(c);
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

struct RawRational {
    Token num;
    std::optional<Token> den;
};

class Parser {
public:
    Parser(std::string_view text, std::vector<Token> tokens) : text_(text), toks_(std::move(tokens)) {}

    ParseResult run()
    {
        ModelFile file;
        parse_model(file);
        while (peek().kind != Tok::end) {
            if (!is_keyword(peek(), "check")) fail(peek(), {"'check'", "end of input"});
            parse_check(file);
        }
        if (semantic_) return *semantic_;
        return file;
    }

private:
    const Token& peek() const
    {
        const Token& t = toks_[pos_];
        if (t.kind == Tok::error) throw Failure{make_diag(text_, ParseDiagnostic::Kind::syntax, t.pos, t.text)};
        return t;
    }
    Token take()
    {
        peek();
        return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_];
    }

    static bool is_keyword(const Token& t, std::string_view kw) { return t.kind == Tok::ident && t.text == kw; }
    static bool is_punct(const Token& t, std::string_view p) { return t.kind == Tok::punct && t.text == p; }

    [[noreturn]] void fail(const Token& at, std::vector<std::string> expected)
    {
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + describe(at);
        throw Failure{make_diag(text_, ParseDiagnostic::Kind::syntax, at.pos, std::move(msg), std::move(expected))};
    }

    void semantic(SourcePos at, std::string message)
    {
        if (!semantic_) semantic_ = make_diag(text_, ParseDiagnostic::Kind::semantic, at, std::move(message));
    }

    Token expect_keyword(std::string_view kw)
    {
        if (!is_keyword(peek(), kw)) fail(peek(), {"'" + std::string(kw) + "'"});
        return take();
    }

    Token expect_punct(std::string_view p)
    {
        if (!is_punct(peek(), p)) fail(peek(), {"'" + std::string(p) + "'"});
        return take();
    }

    Token expect_kind(Tok kind, std::string label)
    {
        if (peek().kind != kind) fail(peek(), {std::move(label)});
        return take();
    }

    // Value of an INT token if it fits in [lo, hi].
    std::optional<std::uint64_t> bounded_int(const Token& t, std::uint64_t lo, std::uint64_t hi, const std::string& what)
    {
        const mpz_class v(t.text, 10);
        if (v < lo || v > hi) {
            semantic(t.pos, what + " must be between " + std::to_string(lo) + " and " + std::to_string(hi));
            return std::nullopt;
        }
        return std::stoull(t.text);
    }

    RawRational parse_rational()
    {
        RawRational r{expect_kind(Tok::integer, "integer"), std::nullopt};
        if (is_punct(peek(), "/")) {
            take();
            r.den = expect_kind(Tok::integer, "integer");
        }
        return r;
    }

    // nullopt (with a semantic error recorded) on a zero denominator.
    std::optional<Rational> to_rational(const RawRational& r)
    {
        const mpz_class num(r.num.text, 10);
        const mpz_class den = r.den ? mpz_class(r.den->text, 10) : mpz_class(1);
        if (den == 0) {
            semantic(r.den->pos, "zero denominator");
            return std::nullopt;
        }
        return Rational(mpq_class(num, den));
    }

    void parse_model(ModelFile& file)
    {
        expect_keyword("model");
        file.name = expect_kind(Tok::string, "model name string").text;
        expect_punct("{");

        expect_keyword("field");
        const Token field = peek();
        if (is_keyword(field, "Q"))
            file.model.field = FieldTag::RealRationals;
        else if (is_keyword(field, "Qi"))
            file.model.field = FieldTag::GaussianRationals;
        else
            fail(field, {"'Q'", "'Qi'"});
        take();

        expect_keyword("dim");
        const Token dim = expect_kind(Tok::integer, "integer");
        file.model.dim = bounded_int(dim, 1, kMaxDim, "dim").value_or(1);

        expect_keyword("product");
        parse_family(file);

        if (is_keyword(peek(), "inner")) {
            take();
            parse_inner(file);
        }
        if (!is_punct(peek(), "}")) fail(peek(), file.inner ? std::vector<std::string>{"'}'"}
                                                            : std::vector<std::string>{"'inner'", "'}'"});
        take();
    }

    void parse_family(ModelFile& file)
    {
        const Token fam = peek();
        if (fam.kind != Tok::ident) fail(fam, {"'trivial'", "'zero_augmented'", "'geometric'", "'sign'"});
        if (fam.text == "trivial") {
            file.model.family = Family::Trivial;
        } else if (fam.text == "zero_augmented") {
            file.model.family = Family::ZeroAugmented;
        } else if (fam.text == "sign") {
            file.model.family = Family::Sign;
            if (file.model.field != FieldTag::RealRationals) semantic(fam.pos, "sign requires field Q");
        } else if (fam.text == "geometric") {
            file.model.family = Family::Geometric;
        } else {
            fail(fam, {"'trivial'", "'zero_augmented'", "'geometric'", "'sign'"});
        }
        take();
        if (file.model.family != Family::Geometric) return;

        expect_punct("(");
        const RawRational raw = parse_rational();
        expect_punct(")");
        if (auto r = to_rational(raw)) {
            if (r->is_zero() || *r == Rational(1))
                semantic(raw.num.pos, "geometric ratio must be positive and different from 1");
            else
                file.model.ratio = *r;
        }
    }

    void parse_inner(ModelFile& file)
    {
        const Token kind = peek();
        if (is_keyword(kind, "dot")) {
            take();
            file.inner = InnerProductSpec::dot();
            return;
        }
        if (!is_keyword(kind, "weighted_dot")) fail(kind, {"'dot'", "'weighted_dot'"});
        take();
        expect_punct("(");
        std::vector<Rational> weights;
        while (true) {
            const RawRational raw = parse_rational();
            if (auto w = to_rational(raw)) {
                if (w->is_zero()) semantic(raw.num.pos, "weights must be positive");
                weights.push_back(*w);
            }
            if (is_punct(peek(), ")")) break;
            if (!is_punct(peek(), ",")) fail(peek(), {"','", "')'"});
            take();
        }
        take();
        if (weights.size() != file.model.dim)
            semantic(kind.pos, "weighted_dot needs " + std::to_string(file.model.dim) + " weights, got " +
                                   std::to_string(weights.size()));
        file.inner = InnerProductSpec::weighted(std::move(weights));
    }

    void parse_check(ModelFile& file)
    {
        CheckDirective check;
        check.pos = take().pos;
        const Token suite = expect_kind(Tok::ident, "suite name");
        check.suite = suite.text;
        if (!is_suite_name(suite.text))
            semantic(suite.pos, "unknown suite '" + suite.text + "'");
        else if (suite_requires_inner_product(suite.text) && !file.inner)
            semantic(suite.pos, "suite '" + suite.text + "' requires an inner product");

        std::vector<std::string> seen;
        while (peek().kind == Tok::ident && peek().text != "check") {
            const Token key = take();
            expect_punct("=");
            const Token value = expect_kind(Tok::integer, "integer");
            if (std::find(seen.begin(), seen.end(), key.text) != seen.end()) {
                semantic(key.pos, "duplicate key '" + key.text + "'");
                continue;
            }
            seen.push_back(key.text);
            if (key.text == "seed") {
                check.seed = bounded_int(value, 0, UINT64_MAX, "seed");
            } else if (key.text == "samples") {
                check.samples = bounded_int(value, 1, kMaxSamples, "samples");
            } else if (key.text == "depth") {
                check.depth = bounded_int(value, 1, kMaxDepth, "depth");
            } else if (key.text == "height") {
                if (auto h = bounded_int(value, 1, kMaxHeight, "height")) check.height = static_cast<long>(*h);
            } else {
                semantic(key.pos, "unknown check key '" + key.text + "' (expected seed, samples, height or depth)");
            }
        }
        file.checks.push_back(std::move(check));
    }

    std::string_view text_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<ParseDiagnostic> semantic_;
};

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

}  // namespace

ParseResult parse_model_file(std::string_view text)
{
    try {
        return Parser(text, Lexer(text).run()).run();
    } catch (const Failure& f) {
        return f.diag;
    }
}

std::string print_model_file(const ModelFile& file)
{
    std::string out = "model " + quote(file.name) + " {\n";
    out += "  field " + std::string(to_string(file.model.field)) + "\n";
    out += "  dim " + std::to_string(file.model.dim) + "\n";
    out += "  product " + file.model.family_string() + "\n";
    if (file.inner) out += "  inner " + file.inner->to_string() + "\n";
    out += "}\n";
    for (const auto& c : file.checks) {
        out += "check " + c.suite;
        if (c.seed) out += " seed=" + std::to_string(*c.seed);
        if (c.samples) out += " samples=" + std::to_string(*c.samples);
        if (c.height) out += " height=" + std::to_string(*c.height);
        if (c.depth) out += " depth=" + std::to_string(*c.depth);
        out += "\n";
    }
    return out;
}

}  // namespace hvs::dsl
