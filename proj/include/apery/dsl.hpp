#pragma once

// Certificate DSL: UTF-8 text, one named operator per stanza,
//
//   name: <expr> [where <guard> {, <guard>}]
//
// with `#` comments. Expressions use usual arithmetic precedence, `^`
// for powers with nonnegative integer exponents, `Sn`/`Sk` as shift
// symbols and every other identifier as a variable. Guards are either
// nonvanishing constraints `<poly> <> 0`, linear inequality chains
// `<lin> <= <lin> [<= <lin>]`, or ranges `<var> in <lin>..<lin>`.

#include "apery/shiftalg.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace apery {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_),
          col(col_) {}
};

namespace dsl {

enum class TokKind { Ident, Number, Punct, End };

struct Token {
    TokKind kind;
    std::string text;
    int line, col;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> toks;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (src[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            toks.push_back({TokKind::Ident, src.substr(i, j - i), line, col});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            toks.push_back({TokKind::Number, src.substr(i, j - i), line, col});
            advance(j - i);
            continue;
        }
        // multi-char punctuation: <>, <=, ..
        if (c == '<' && i + 1 < src.size() && (src[i + 1] == '>' || src[i + 1] == '=')) {
            toks.push_back({TokKind::Punct, src.substr(i, 2), line, col});
            advance(2);
            continue;
        }
        if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
            toks.push_back({TokKind::Punct, "..", line, col});
            advance(2);
            continue;
        }
        if (std::string("+-*/^():,").find(c) != std::string::npos) {
            toks.push_back({TokKind::Punct, std::string(1, c), line, col});
            advance(1);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    toks.push_back({TokKind::End, "", line, col});
    return toks;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    std::vector<AnnRec> parse_file() {
        std::vector<AnnRec> out;
        while (peek().kind != TokKind::End) out.push_back(parse_stanza());
        return out;
    }

    // A bare expression (no stanza header), for programmatic use.
    ShiftOp parse_expression() {
        ShiftOp e = parse_expr();
        expect_end();
        return e;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_punct(const std::string& p) const {
        return peek().kind == TokKind::Punct && peek().text == p;
    }
    void expect_punct(const std::string& p) {
        if (!at_punct(p))
            throw ParseError("expected '" + p + "', found '" + peek().text + "'", peek().line,
                             peek().col);
        take();
    }
    void expect_end() {
        if (peek().kind != TokKind::End)
            throw ParseError("trailing input '" + peek().text + "'", peek().line, peek().col);
    }

    AnnRec parse_stanza() {
        if (peek().kind != TokKind::Ident)
            throw ParseError("expected stanza name", peek().line, peek().col);
        AnnRec rec;
        rec.name = take().text;
        expect_punct(":");
        rec.op = parse_expr();
        if (peek().kind == TokKind::Ident && peek().text == "where") {
            take();
            parse_guard(rec.guard);
            while (at_punct(",")) {
                take();
                parse_guard(rec.guard);
            }
        }
        return rec;
    }

    void parse_guard(Proviso& guard) {
        // Range guard: ident in lo..hi
        if (peek().kind == TokKind::Ident && peek(1).kind == TokKind::Ident &&
            peek(1).text == "in") {
            MultiPoly v = MultiPoly::variable(take().text);
            take();  // in
            MultiPoly lo = guard_poly(parse_expr());
            expect_punct("..");
            MultiPoly hi = guard_poly(parse_expr());
            guard.nonnegative.push_back(v - lo);
            guard.nonnegative.push_back(hi - v);
            return;
        }
        ShiftOp lhs = parse_expr();
        if (at_punct("<>")) {
            Token t = take();
            ShiftOp rhs = parse_expr();
            if (!rhs.is_zero())
                throw ParseError("nonvanishing guard must compare against 0", t.line, t.col);
            guard.nonvanishing.push_back(guard_poly(lhs));
            return;
        }
        if (at_punct("<=")) {
            MultiPoly prev = guard_poly(lhs);
            while (at_punct("<=")) {
                take();
                MultiPoly next = guard_poly(parse_expr());
                guard.nonnegative.push_back(next - prev);
                prev = next;
            }
            return;
        }
        throw ParseError("expected '<>', '<=' or 'in' in guard", peek().line, peek().col);
    }

    MultiPoly guard_poly(const ShiftOp& e) const {
        if (!e.is_shift_free())
            throw ParseError("guard must be shift-free", peek().line, peek().col);
        RatFun c = e.constant_coeff();
        if (!c.is_polynomial())
            throw ParseError("guard must be polynomial", peek().line, peek().col);
        return c.num() * (Rat(1) / c.den().constant_value());
    }

    ShiftOp parse_expr() {
        ShiftOp e = parse_term();
        while (at_punct("+") || at_punct("-")) {
            bool plus = take().text == "+";
            ShiftOp t = parse_term();
            e = plus ? e + t : e - t;
        }
        return e;
    }

    ShiftOp parse_term() {
        ShiftOp e = parse_factor();
        while (at_punct("*") || at_punct("/")) {
            Token op = take();
            ShiftOp f = parse_factor();
            if (op.text == "*") {
                e = e * f;
            } else {
                if (!f.is_shift_free())
                    throw ParseError("division by an operator with shifts", op.line, op.col);
                RatFun d = f.constant_coeff();
                if (d.is_zero())
                    throw ParseError("division by zero", op.line, op.col);
                e = e * ShiftOp::coeff(RatFun(Rat(1)) / d);
            }
        }
        return e;
    }

    ShiftOp parse_factor() {
        if (at_punct("-")) {
            take();
            return -parse_factor();
        }
        ShiftOp base = parse_atom();
        if (at_punct("^")) {
            Token caret = take();
            bool neg = false;
            if (at_punct("-")) {
                take();
                neg = true;
            }
            if (peek().kind != TokKind::Number)
                throw ParseError("expected integer exponent", peek().line, peek().col);
            long e = std::stol(take().text);
            if (neg)
                throw ParseError("negative exponents are not allowed", caret.line, caret.col);
            return base.pow(e);
        }
        return base;
    }

    ShiftOp parse_atom() {
        const Token& t = peek();
        if (t.kind == TokKind::Number) {
            take();
            return ShiftOp::coeff(RatFun(Rat(Int(t.text))));
        }
        if (t.kind == TokKind::Ident) {
            take();
            if (t.text == "Sn") return ShiftOp::monomial(1, 0);
            if (t.text == "Sk") return ShiftOp::monomial(0, 1);
            return ShiftOp::coeff(RatFun::variable(t.text));
        }
        if (at_punct("(")) {
            take();
            ShiftOp e = parse_expr();
            expect_punct(")");
            return e;
        }
        throw ParseError("expected number, identifier or '('", t.line, t.col);
    }
};

}  // namespace dsl

inline std::vector<AnnRec> parse_certificates(const std::string& text) {
    return dsl::Parser(text).parse_file();
}

inline AnnRec parse_operator(const std::string& text) {
    auto recs = parse_certificates(text.find(':') == std::string::npos ? "anonymous: " + text
                                                                       : text);
    if (recs.size() != 1) throw ParseError("expected exactly one stanza", 1, 1);
    return recs.front();
}

inline std::string render_stanza(const AnnRec& rec) {
    std::string out = rec.name + ": " + rec.op.str();
    std::vector<std::string> guards;
    for (const auto& p : rec.guard.nonvanishing) guards.push_back(p.str() + " <> 0");
    for (const auto& p : rec.guard.nonnegative) guards.push_back("0 <= " + p.str());
    if (!guards.empty()) {
        out += " where ";
        for (std::size_t i = 0; i < guards.size(); ++i) {
            if (i) out += ", ";
            out += guards[i];
        }
    }
    return out;
}

}  // namespace apery
