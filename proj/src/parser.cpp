#include "slsc/error.hpp"
#include "slsc/formula.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace slsc {

namespace {

enum class Tok { ident, kw_true, kw_false, lparen, rparen, bang, amp, bar, op_n, op_c, op_r, op_s, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

// Unicode synonyms, UTF-8 encoded.
struct Synonym {
    std::string_view bytes;
    Tok kind;
};
constexpr Synonym synonyms[] = {
    {"\xC2\xAC", Tok::bang},        // ¬
    {"\xE2\x88\xA7", Tok::amp},     // ∧
    {"\xE2\x88\xA8", Tok::bar},     // ∨
    {"\xE2\x8A\xA4", Tok::kw_true}, // ⊤
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < text_.size()) {
            const char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++i;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
                std::size_t j = i;
                while (j < text_.size() && is_ident_char(text_[j])) {
                    ++j;
                }
                std::string word(text_.substr(i, j - i));
                out.push_back({keyword(word), word, i});
                i = j;
                continue;
            }
            Tok kind = Tok::end;
            std::size_t width = 1;
            switch (c) {
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '!': kind = Tok::bang; break;
            case '&': kind = Tok::amp; break;
            case '|': kind = Tok::bar; break;
            default:
                for (const auto& syn : synonyms) {
                    if (text_.substr(i, syn.bytes.size()) == syn.bytes) {
                        kind = syn.kind;
                        width = syn.bytes.size();
                        break;
                    }
                }
            }
            if (kind == Tok::end) {
                throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, c) + "'",
                            position_in(text_, i));
            }
            out.push_back({kind, std::string(text_.substr(i, width)), i});
            i += width;
        }
        out.push_back({Tok::end, "", text_.size()});
        return out;
    }

private:
    static Tok keyword(const std::string& word)
    {
        if (word == "true") return Tok::kw_true;
        if (word == "false") return Tok::kw_false;
        if (word == "N") return Tok::op_n;
        if (word == "C") return Tok::op_c;
        if (word == "R") return Tok::op_r;
        if (word == "S") return Tok::op_s;
        return Tok::ident;
    }

    std::string_view text_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text), tokens_(Lexer(text).run()) {}

    Formula run()
    {
        auto f = parse_reach();
        if (peek().kind == Tok::rparen) {
            throw Error(ErrorCode::UnbalancedParens, "unmatched ')'", position_in(text_, peek().offset));
        }
        expect_end();
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& at, const std::string& what) const
    {
        const std::string found = at.kind == Tok::end ? "end of input" : "'" + at.text + "'";
        throw Error(ErrorCode::SyntaxError, what + ", found " + found, position_in(text_, at.offset));
    }

    void expect_end() const
    {
        if (peek().kind != Tok::end) {
            fail(peek(), "expected an operator or end of input");
        }
    }

    Formula parse_reach()
    {
        auto lhs = parse_or();
        if (peek().kind == Tok::op_r) {
            advance();
            return Formula::reach(std::move(lhs), parse_reach());
        }
        if (peek().kind == Tok::op_s) {
            advance();
            return surround(std::move(lhs), parse_reach());
        }
        return lhs;
    }

    Formula parse_or()
    {
        auto lhs = parse_and();
        while (peek().kind == Tok::bar) {
            advance();
            lhs = disjunction(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_and()
    {
        auto lhs = parse_unary();
        while (peek().kind == Tok::amp) {
            advance();
            lhs = Formula::conjunction(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Formula parse_unary()
    {
        switch (peek().kind) {
        case Tok::bang: advance(); return Formula::negation(parse_unary());
        case Tok::op_n: advance(); return Formula::neighborhood(parse_unary());
        case Tok::op_c: advance(); return closure(parse_unary());
        default: return parse_primary();
        }
    }

    Formula parse_primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::kw_true: advance(); return Formula::top();
        case Tok::kw_false: advance(); return falsum();
        case Tok::ident: advance(); return Formula::atom(t.text);
        case Tok::lparen: {
            const Token open = advance();
            ++open_parens_;
            auto inner = parse_reach();
            --open_parens_;
            if (peek().kind == Tok::end) {
                throw Error(ErrorCode::UnbalancedParens, "'(' is never closed", position_in(text_, open.offset));
            }
            if (peek().kind != Tok::rparen) {
                fail(peek(), "expected ')'");
            }
            advance();
            return inner;
        }
        case Tok::rparen:
            if (open_parens_ > 0) {
                fail(t, "expected a formula");
            }
            throw Error(ErrorCode::UnbalancedParens, "unmatched ')'", position_in(text_, t.offset));
        default: fail(t, "expected a formula");
        }
    }

    std::string_view text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t open_parens_ = 0;
};

// Binding strength of a formula's top constructor.
int precedence(const Formula& f)
{
    switch (f.kind()) {
    case FormulaKind::reach: return 0;
    case FormulaKind::conjunction: return 2;
    case FormulaKind::negation:
    case FormulaKind::neighborhood: return 3;
    case FormulaKind::atom:
    case FormulaKind::top: return 4;
    }
    return 0;
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out)
{
    if (parens) {
        out += '(';
    }
    render_into(f, out);
    if (parens) {
        out += ')';
    }
}

void render_into(const Formula& f, std::string& out)
{
    switch (f.kind()) {
    case FormulaKind::atom: out += f.name(); return;
    case FormulaKind::top: out += "true"; return;
    case FormulaKind::negation:
        out += '!';
        render_operand(f.operand(), precedence(f.operand()) < 3, out);
        return;
    case FormulaKind::neighborhood:
        out += "N ";
        render_operand(f.operand(), precedence(f.operand()) < 3, out);
        return;
    case FormulaKind::conjunction:
        render_operand(f.lhs(), precedence(f.lhs()) < 2, out);
        out += " & ";
        render_operand(f.rhs(), precedence(f.rhs()) <= 2, out);
        return;
    case FormulaKind::reach:
        render_operand(f.lhs(), precedence(f.lhs()) == 0, out);
        out += " R ";
        render_operand(f.rhs(), false, out);
        return;
    }
}

} // namespace

Formula parse_formula(std::string_view text)
{
    return Parser(text).run();
}

std::string render(const Formula& f)
{
    std::string out;
    render_into(f, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f)
{
    return os << render(f);
}

} // namespace slsc
