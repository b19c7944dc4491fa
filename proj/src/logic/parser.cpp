#include "fmw/parser.hpp"

#include <cctype>

#include "fmw/error.hpp"

namespace fmw {

namespace {

enum class Tok { ident, lparen, rparen, comma, dot, bang, amp, bar, arrow, eq, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const int l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l, cl});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Tok::arrow, "->", l, cl});
            advance(2);
            continue;
        }
        Tok k;
        switch (c) {
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case ',': k = Tok::comma; break;
            case '.': k = Tok::dot; break;
            case '!': k = Tok::bang; break;
            case '&': k = Tok::amp; break;
            case '|': k = Tok::bar; break;
            case '=': k = Tok::eq; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
        out.push_back({k, std::string(1, c), l, cl});
        advance(1);
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse_all() {
        Formula f = parse_implication();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(t.kind == Tok::end ? msg + " (end of input)" : msg, t.line, t.column);
    }

    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        return next();
    }

    Formula parse_implication() {
        Formula lhs = parse_disjunction();
        if (peek().kind == Tok::arrow) {
            next();
            return implies(std::move(lhs), parse_implication());
        }
        return lhs;
    }

    Formula parse_disjunction() {
        std::vector<Formula> parts{parse_conjunction()};
        while (peek().kind == Tok::bar) {
            next();
            parts.push_back(parse_conjunction());
        }
        return parts.size() == 1 ? parts.front() : disj(std::move(parts));
    }

    Formula parse_conjunction() {
        std::vector<Formula> parts{parse_unary()};
        while (peek().kind == Tok::amp) {
            next();
            parts.push_back(parse_unary());
        }
        return parts.size() == 1 ? parts.front() : conj(std::move(parts));
    }

    bool at_quantifier() const {
        return peek().kind == Tok::ident && (peek().text == "E" || peek().text == "A") &&
               peek(1).kind == Tok::ident && peek(2).kind == Tok::dot;
    }

    Formula parse_unary() {
        if (peek().kind == Tok::bang) {
            next();
            return negation(parse_unary());
        }
        if (at_quantifier()) {
            const bool ex = next().text == "E";
            std::string v = next().text;
            next();
            Formula body = parse_implication();
            return ex ? exists(std::move(v), std::move(body)) : forall(std::move(v), std::move(body));
        }
        return parse_primary();
    }

    Formula parse_primary() {
        if (peek().kind == Tok::lparen) {
            next();
            Formula f = parse_implication();
            expect(Tok::rparen, "')'");
            return f;
        }
        if (peek().kind != Tok::ident) fail("expected a formula");
        const Token& id = next();
        if (peek().kind == Tok::lparen) {
            next();
            std::vector<std::string> args;
            args.push_back(expect(Tok::ident, "variable").text);
            while (peek().kind == Tok::comma) {
                next();
                args.push_back(expect(Tok::ident, "variable").text);
            }
            expect(Tok::rparen, "')'");
            return atom(id.text, std::move(args));
        }
        if (peek().kind == Tok::eq) {
            next();
            return equal(id.text, expect(Tok::ident, "variable").text);
        }
        if (id.text == "true") return top();
        if (id.text == "false") return bottom();
        throw ParseError("expected '(' or '=' after '" + id.text + "'", id.line, id.column);
    }
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

void check_signature(const Formula& f, const Signature& sig) {
    if (f.kind() == NodeKind::atom) {
        if (f.symbol() == "s" && !sig.has_s())
            throw InputError("symbol 's' used but the signature has no s");
        if (!sig.contains(f.symbol())) throw InputError("unknown relation symbol '" + f.symbol() + "'");
        const int ar = sig.arity(f.symbol());
        if (ar != static_cast<int>(f.args().size()))
            throw InputError("symbol '" + f.symbol() + "' has arity " + std::to_string(ar) + " but is used with " +
                             std::to_string(f.args().size()) + " argument(s)");
        return;
    }
    for (const auto& c : f.children()) check_signature(c, sig);
}

Formula parse(std::string_view text, const Signature& sig) {
    Formula f = parse(text);
    check_signature(f, sig);
    return f;
}

}  // namespace fmw
