//
// Copyright (c) 2026 The alogsets authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <alogsets/parser.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace alogsets {

namespace {

enum class Tok {
    Ident,     // lowercase-initial name
    Var,       // uppercase- or underscore-initial name
    Int,
    Directive, // #name
    If,        // :-
    Dot,
    Comma,
    Bar,       // | or ;
    LParen,
    RParen,
    LBrace,
    RBrace,
    Colon,
    Minus,
    Plus,
    Star,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    SetSubEq,  // <=s, ⊆
    SetSub,    // <s, ⊂
    SetEq,     // =s
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

const char* describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::Int: return "integer";
    case Tok::Directive: return "directive";
    case Tok::If: return "':-'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Minus: return "'-'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::SetSubEq: return "'<=s'";
    case Tok::SetSub: return "'<s'";
    case Tok::SetEq: return "'=s'";
    case Tok::End: return "end of input";
    }
    return "token";
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                out.push_back(t);
                return out;
            }
            lex_one(t);
            out.push_back(std::move(t));
        }
    }

private:
    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance(1);
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else {
                return;
            }
        }
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i != n && pos_ < src_.size(); ++i) {
            char c = src_[pos_++];
            if (c == '\n') {
                ++line_;
                column_ = 1;
            } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
                ++column_;
            }
        }
    }

    bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

    // Set-relation suffix `s` only counts when not followed by a name character.
    bool set_suffix_at(std::size_t off) const {
        std::size_t at = pos_ + off;
        return at < src_.size() && src_[at] == 's' && (at + 1 >= src_.size() || !is_ident_char(src_[at + 1]));
    }

    void lex_one(Token& t) {
        struct Fixed {
            std::string_view text;
            Tok kind;
        };
        // Multi-byte UTF-8 symbols from the mathematical notation.
        static const Fixed unicode[] = {
            {"⊆", Tok::SetSubEq}, {"⊂", Tok::SetSub}, {"≠", Tok::Ne},
            {"≥", Tok::Ge},       {"≤", Tok::Le},     {"←", Tok::If},
            {"¬", Tok::Minus},
        };
        for (const auto& u : unicode) {
            if (starts_with(u.text)) {
                t.kind = u.kind;
                t.text = std::string(u.text);
                advance(u.text.size());
                return;
            }
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
                ++end;
            }
            t.kind = Tok::Int;
            t.text = std::string(src_.substr(pos_, end - pos_));
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
            if (ec != std::errc{}) {
                throw ParseError(ParseErrorKind::Lexical, line_, column_, "integer out of range: " + t.text);
            }
            advance(end - pos_);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() && is_ident_char(src_[end])) {
                ++end;
            }
            t.text = std::string(src_.substr(pos_, end - pos_));
            t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Var : Tok::Ident;
            advance(end - pos_);
            return;
        }
        if (c == '#') {
            std::size_t end = pos_ + 1;
            while (end < src_.size() && is_ident_char(src_[end])) {
                ++end;
            }
            if (end == pos_ + 1) {
                throw ParseError(ParseErrorKind::Lexical, line_, column_, "expected directive name after '#'");
            }
            t.kind = Tok::Directive;
            t.text = std::string(src_.substr(pos_ + 1, end - pos_ - 1));
            advance(end - pos_);
            return;
        }
        auto fixed = [&](Tok kind, std::size_t len) {
            t.kind = kind;
            t.text = std::string(src_.substr(pos_, len));
            advance(len);
        };
        switch (c) {
        case ':':
            return starts_with(":-") ? fixed(Tok::If, 2) : fixed(Tok::Colon, 1);
        case '.': return fixed(Tok::Dot, 1);
        case ',': return fixed(Tok::Comma, 1);
        case '|':
        case ';': return fixed(Tok::Bar, 1);
        case '(': return fixed(Tok::LParen, 1);
        case ')': return fixed(Tok::RParen, 1);
        case '{': return fixed(Tok::LBrace, 1);
        case '}': return fixed(Tok::RBrace, 1);
        case '-': return fixed(Tok::Minus, 1);
        case '+': return fixed(Tok::Plus, 1);
        case '*': return fixed(Tok::Star, 1);
        case '!':
            if (starts_with("!=")) {
                return fixed(Tok::Ne, 2);
            }
            break;
        case '=':
            if (set_suffix_at(1)) {
                return fixed(Tok::SetEq, 2);
            }
            return starts_with("==") ? fixed(Tok::Eq, 2) : fixed(Tok::Eq, 1);
        case '<':
            if (starts_with("<=")) {
                return set_suffix_at(2) ? fixed(Tok::SetSubEq, 3) : fixed(Tok::Le, 2);
            }
            return set_suffix_at(1) ? fixed(Tok::SetSub, 2) : fixed(Tok::Lt, 1);
        case '>':
            return starts_with(">=") ? fixed(Tok::Ge, 2) : fixed(Tok::Gt, 1);
        default:
            break;
        }
        std::string bad(1, c);
        if ((static_cast<unsigned char>(c) & 0x80) != 0) {
            std::size_t len = 1;
            while (pos_ + len < src_.size() && (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) {
                ++len;
            }
            bad = std::string(src_.substr(pos_, len));
        }
        throw ParseError(ParseErrorKind::Lexical, line_, column_, "unexpected character '" + bad + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

bool is_cmp(Tok t) {
    return t == Tok::Eq || t == Tok::Ne || t == Tok::Lt || t == Tok::Le || t == Tok::Gt || t == Tok::Ge;
}

bool is_set_only_rel(Tok t) {
    return t == Tok::SetSubEq || t == Tok::SetSub || t == Tok::SetEq;
}

// Plain relations that denote a set relation when an operand is a set term.
bool is_ambiguous_rel(Tok t) {
    return t == Tok::Le || t == Tok::Lt || t == Tok::Eq;
}

CmpRel to_cmp(Tok t) {
    switch (t) {
    case Tok::Eq: return CmpRel::Eq;
    case Tok::Ne: return CmpRel::Ne;
    case Tok::Lt: return CmpRel::Lt;
    case Tok::Le: return CmpRel::Le;
    case Tok::Gt: return CmpRel::Gt;
    default: return CmpRel::Ge;
    }
}

SetRelOp to_set_rel(Tok t) {
    switch (t) {
    case Tok::SetSub:
    case Tok::Lt: return SetRelOp::Subset;
    case Tok::SetEq:
    case Tok::Eq: return SetRelOp::Equal;
    default: return SetRelOp::SubsetEq;
    }
}

std::optional<AggregateFn> aggregate_name(const std::string& s) {
    if (s == "card") return AggregateFn::Card;
    if (s == "sum") return AggregateFn::Sum;
    if (s == "min") return AggregateFn::Min;
    if (s == "max") return AggregateFn::Max;
    return std::nullopt;
}

struct Location {
    std::size_t line = 0;
    std::size_t column = 0;
};

// A set operand written as a bare predicate name; arity is resolved once the
// whole program is known.
struct PendingShorthand {
    std::size_t rule;
    Location where;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program() {
        Program prog;
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Directive) {
                directive(prog);
                continue;
            }
            Location start{peek().line, peek().column};
            Rule r = rule();
            check_scope(r, start);
            rule_locations_.push_back(start);
            prog.rules.push_back(std::move(r));
        }
        resolve_shorthands(prog);
        prog.signature.arities.clear();
        for (const auto& [name, info] : arities_) {
            prog.signature.arities[name] = info.first;
        }
        return prog;
    }

    std::vector<GroundLiteral> literal_list() {
        std::vector<GroundLiteral> out;
        if (peek().kind == Tok::End) {
            return out;
        }
        for (;;) {
            const Token& at = peek();
            Literal l = literal();
            if (!l.is_ground() || l.args.end() != std::find_if(l.args.begin(), l.args.end(), [](const Term& t) {
                    return t.has_arith();
                })) {
                throw ParseError(ParseErrorKind::Syntax, at.line, at.column, "literal is not ground: " + to_string(l));
            }
            out.emplace_back(std::move(l));
            if (peek().kind == Tok::Comma) {
                next();
                continue;
            }
            expect(Tok::End, "after literal list");
            return out;
        }
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) {
            ++pos_;
        }
        return t;
    }
    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(ParseErrorKind::Syntax, at.line, at.column, msg);
    }
    const Token& expect(Tok kind, const char* context) {
        if (peek().kind != kind) {
            std::string found = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
            fail(peek(), std::string("expected ") + describe(kind) + " " + context + ", found " + found);
        }
        return next();
    }

    void directive(Program& prog) {
        const Token& d = next();
        if (d.text != "int") {
            fail(d, "unknown directive #" + d.text);
        }
        if (prog.signature.int_range) {
            fail(d, "duplicate #int directive");
        }
        expect(Tok::LParen, "after #int");
        std::int64_t lo = signed_int();
        expect(Tok::Comma, "in #int directive");
        std::int64_t hi = signed_int();
        expect(Tok::RParen, "to close #int");
        expect(Tok::Dot, "to end #int directive");
        if (lo > hi) {
            fail(d, "#int range is empty: " + std::to_string(lo) + " > " + std::to_string(hi));
        }
        prog.signature.int_range = IntRange{lo, hi};
    }

    std::int64_t signed_int() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        }
        const Token& t = expect(Tok::Int, "in directive");
        return neg ? -t.value : t.value;
    }

    Rule rule() {
        Rule r;
        r.head = Disjunction{};
        if (peek().kind != Tok::If) {
            r.head = head();
        }
        if (peek().kind == Tok::If) {
            next();
            if (peek().kind != Tok::Dot) {
                for (;;) {
                    r.body.push_back(body_element());
                    if (peek().kind != Tok::Comma) {
                        break;
                    }
                    next();
                }
            }
        }
        expect(Tok::Dot, "at end of rule");
        return r;
    }

    bool set_operand_follows_ident() const {
        Tok rel = peek(1).kind;
        return is_set_only_rel(rel) || (is_ambiguous_rel(rel) && peek(2).kind == Tok::LBrace);
    }

    Head head() {
        if (peek().kind == Tok::LBrace) {
            const Token& at = peek();
            SetName s = set_name();
            Tok rel = next().kind;
            if (rel != Tok::Le && rel != Tok::SetSubEq && rel != Tok::Eq && rel != Tok::SetEq) {
                fail(at, "set introduction head must have the form p <= S, S <= p or p = S");
            }
            const Token& p = expect(Tok::Ident, "naming the introduced predicate");
            return SetIntro{rel == Tok::Eq || rel == Tok::SetEq ? IntroKind::Equals : IntroKind::SupersetOf, p.text,
                            std::move(s)};
        }
        if (peek().kind == Tok::Ident && (is_set_only_rel(peek(1).kind) || is_ambiguous_rel(peek(1).kind))) {
            const Token& p = next();
            const Token& relTok = next();
            Tok rel = relTok.kind;
            if (rel == Tok::Lt || rel == Tok::SetSub) {
                fail(relTok, "strict subset is not allowed in a set introduction head");
            }
            SetName s = set_operand();
            return SetIntro{rel == Tok::Eq || rel == Tok::SetEq ? IntroKind::Equals : IntroKind::SubsetOf, p.text,
                            std::move(s)};
        }
        Disjunction d;
        for (;;) {
            d.literals.push_back(literal());
            if (peek().kind != Tok::Bar) {
                break;
            }
            next();
        }
        return d;
    }

    bool aggregate_starts() const {
        if (peek().kind != Tok::Ident || !aggregate_name(peek().text)) {
            return false;
        }
        return peek(1).kind == Tok::LBrace || (peek(1).kind == Tok::LParen && peek(2).kind == Tok::LBrace);
    }

    BodyElement body_element() {
        const Token& start = peek();
        if (start.kind == Tok::Ident && start.text == "not" && peek(1).kind != Tok::LParen && !is_cmp(peek(1).kind)) {
            next();
            if (aggregate_starts() || peek().kind == Tok::LBrace ||
                (peek().kind == Tok::Ident && set_operand_follows_ident())) {
                fail(start, "'not' cannot precede a set atom");
            }
            return Naf{literal()};
        }
        if (aggregate_starts()) {
            return SetAtom(aggregate_atom());
        }
        if (start.kind == Tok::LBrace || (start.kind == Tok::Ident && set_operand_follows_ident())) {
            SetName left = set_operand();
            const Token& relTok = next();
            if (!is_set_only_rel(relTok.kind) && !is_ambiguous_rel(relTok.kind)) {
                fail(relTok, "expected a set relation (<=, <, =, <=s, <s, =s)");
            }
            SetName right = set_operand();
            return SetAtom(SetRel{std::move(left), to_set_rel(relTok.kind), std::move(right)});
        }
        if (start.kind == Tok::Minus && peek(1).kind == Tok::Ident) {
            return Pos{literal()};
        }
        Term lhs = term();
        if (is_cmp(peek().kind)) {
            CmpRel rel = to_cmp(next().kind);
            Term rhs = term();
            return Comparison{std::move(lhs), rel, std::move(rhs)};
        }
        return Pos{term_to_literal(lhs, start)};
    }

    void aggregate_head(AggregateFn& fn, SetName& s) {
        fn = *aggregate_name(next().text);
        bool paren = false;
        if (peek().kind == Tok::LParen) {
            next();
            paren = true;
        }
        s = set_name();
        if (paren) {
            expect(Tok::RParen, "to close aggregate");
        }
    }

    SetAtom aggregate_atom() {
        AggregateFn fn{};
        SetName s;
        aggregate_head(fn, s);
        if (!is_cmp(peek().kind)) {
            fail(peek(), "expected a comparison after aggregate");
        }
        CmpRel rel = to_cmp(next().kind);
        if (aggregate_starts()) {
            AggregateFn fn2{};
            SetName s2;
            aggregate_head(fn2, s2);
            return AggAggCmp{fn, std::move(s), rel, fn2, std::move(s2)};
        }
        return AggCmp{fn, std::move(s), rel, term()};
    }

    SetName set_operand() {
        if (peek().kind == Tok::LBrace) {
            return set_name();
        }
        const Token& p = expect(Tok::Ident, "as set operand");
        if (peek().kind == Tok::LParen) {
            fail(p, "a set operand must be a set name or a bare predicate name");
        }
        SetName s;
        s.shorthand = p.text;
        pending_.push_back({current_rule(), {p.line, p.column}});
        return s;
    }

    std::size_t current_rule() const { return rule_locations_.size(); }

    SetName set_name() {
        expect(Tok::LBrace, "to open set name");
        SetName s;
        bool cond_negated_first = false;
        if (peek().kind != Tok::Colon && peek().kind != Tok::If) {
            for (;;) {
                const Token& v = expect(Tok::Var, "in set name variable list");
                if (std::find(s.vars.begin(), s.vars.end(), v.text) != s.vars.end()) {
                    throw ParseError(ParseErrorKind::Scope, v.line, v.column,
                                     "set variable " + v.text + " listed twice");
                }
                s.vars.push_back(v.text);
                if (peek().kind != Tok::Comma) {
                    break;
                }
                next();
            }
        }
        // `{X:-p(X)}` lexes the colon and the negation sign together.
        if (peek().kind == Tok::If) {
            cond_negated_first = true;
            next();
        } else {
            expect(Tok::Colon, "after set variables");
        }
        for (bool first = true;; first = false) {
            Literal l = (first && cond_negated_first) ? literal_after_minus() : literal();
            s.cond.push_back(std::move(l));
            if (peek().kind != Tok::Comma) {
                break;
            }
            next();
        }
        expect(Tok::RBrace, "to close set name");
        return s;
    }

    Literal literal_after_minus() {
        Literal l = literal();
        if (l.negated) {
            fail(peek(), "double classical negation");
        }
        l.negated = true;
        return l;
    }

    Literal literal() {
        const Token& start = peek();
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        }
        const Token& name = peek();
        if (name.kind != Tok::Ident) {
            fail(name, std::string("expected a literal, found ") +
                           (name.kind == Tok::End ? "end of input" : "'" + name.text + "'"));
        }
        if (aggregate_starts()) {
            fail(name, "set atom not allowed here");
        }
        next();
        Literal l{neg, name.text, {}};
        if (peek().kind == Tok::LParen) {
            next();
            for (;;) {
                l.args.push_back(term());
                if (peek().kind != Tok::Comma) {
                    break;
                }
                next();
            }
            expect(Tok::RParen, "to close argument list");
        }
        register_arity(l.predicate, l.args.size(), start);
        return l;
    }

    Literal term_to_literal(const Term& t, const Token& at) {
        Literal l;
        if (t.is<Constant>()) {
            l.predicate = t.as<Constant>().name;
        } else if (t.is<Function>()) {
            l.predicate = t.as<Function>().name;
            l.args = t.as<Function>().args;
        } else {
            fail(at, "expected a literal or a comparison");
        }
        register_arity(l.predicate, l.args.size(), at);
        return l;
    }

    void register_arity(const std::string& pred, std::size_t arity, const Token& at) {
        register_arity(pred, arity, Location{at.line, at.column});
    }

    void register_arity(const std::string& pred, std::size_t arity, Location at) {
        auto [it, inserted] = arities_.emplace(pred, std::make_pair(arity, at));
        if (!inserted && it->second.first != arity) {
            throw ParseError(ParseErrorKind::Arity, at.line, at.column,
                             "predicate " + pred + " used with arity " + std::to_string(arity) +
                                 " but first used with arity " + std::to_string(it->second.first) + " at " +
                                 std::to_string(it->second.second.line) + ":" +
                                 std::to_string(it->second.second.column));
        }
    }

    Term term() { return additive(); }

    Term additive() {
        Term lhs = multiplicative();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            ArithOp op = next().kind == Tok::Plus ? ArithOp::Add : ArithOp::Sub;
            lhs = Term::arith(op, std::move(lhs), multiplicative());
        }
        return lhs;
    }

    Term multiplicative() {
        Term lhs = unary();
        while (peek().kind == Tok::Star) {
            next();
            lhs = Term::arith(ArithOp::Mul, std::move(lhs), unary());
        }
        return lhs;
    }

    Term unary() {
        if (peek().kind == Tok::Minus) {
            const Token& m = next();
            if (peek().kind == Tok::Int) {
                const Token& t = next();
                return Term::integer(-t.value);
            }
            if (peek().kind == Tok::Ident) {
                fail(m, "classical negation is not allowed inside a term");
            }
            return Term::arith(ArithOp::Sub, Term::integer(0), unary());
        }
        return primary();
    }

    Term primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int:
            next();
            return Term::integer(t.value);
        case Tok::Var:
            next();
            return Term::variable(t.text);
        case Tok::Ident: {
            next();
            if (peek().kind != Tok::LParen) {
                return Term::constant(t.text);
            }
            next();
            TermVec args;
            for (;;) {
                args.push_back(term());
                if (peek().kind != Tok::Comma) {
                    break;
                }
                next();
            }
            expect(Tok::RParen, "to close function term");
            return Term::function(t.text, std::move(args));
        }
        case Tok::LParen: {
            next();
            Term inner = term();
            expect(Tok::RParen, "to close parenthesized term");
            return inner;
        }
        default:
            fail(t, std::string("expected a term, found ") + (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"));
        }
    }

    // Scope rules: set variables are bound by their set name and may not share
    // a name with any rule-level variable; they may not occur inside arithmetic.
    void check_scope(const Rule& r, Location at) {
        std::vector<std::string> global;
        std::vector<const SetName*> names;
        auto add_set_name = [&](const SetName& s) {
            names.push_back(&s);
            std::vector<std::string> vs;
            for (const auto& l : s.cond) {
                l.collect_variables(vs);
            }
            for (const auto& v : vs) {
                if (std::find(s.vars.begin(), s.vars.end(), v) == s.vars.end()) {
                    global.push_back(v);
                }
            }
        };
        if (const auto* d = std::get_if<Disjunction>(&r.head)) {
            for (const auto& l : d->literals) {
                l.collect_variables(global);
            }
        } else {
            add_set_name(std::get<SetIntro>(r.head).set);
        }
        for (const auto& e : r.body) {
            std::visit([&](const auto& el) {
                using T = std::decay_t<decltype(el)>;
                if constexpr (std::is_same_v<T, Pos> || std::is_same_v<T, Naf>) {
                    el.lit.collect_variables(global);
                } else if constexpr (std::is_same_v<T, Comparison>) {
                    el.left.collect_variables(global);
                    el.right.collect_variables(global);
                } else {
                    if (const auto* a = std::get_if<AggCmp>(&el)) {
                        a->bound.collect_variables(global);
                    }
                    for (const SetName* s : set_names(el)) {
                        add_set_name(*s);
                    }
                }
            }, e);
        }
        for (const SetName* s : names) {
            if (s->shorthand && s->cond.empty()) {
                continue;
            }
            for (const auto& v : s->vars) {
                if (std::find(global.begin(), global.end(), v) != global.end()) {
                    throw ParseError(ParseErrorKind::Scope, at.line, at.column,
                                     "set variable " + v + " shadows a rule variable of the same name");
                }
                bool occurs = false;
                for (const auto& l : s->cond) {
                    for (const auto& a : l.args) {
                        std::vector<std::string> vs;
                        a.collect_variables(vs);
                        if (std::find(vs.begin(), vs.end(), v) == vs.end()) {
                            continue;
                        }
                        occurs = true;
                        if (a.has_arith()) {
                            throw ParseError(ParseErrorKind::Scope, at.line, at.column,
                                             "set variable " + v + " occurs inside an arithmetic expression");
                        }
                    }
                }
                if (!occurs) {
                    throw ParseError(ParseErrorKind::Scope, at.line, at.column,
                                     "set variable " + v + " does not occur in the set condition");
                }
            }
        }
    }

    static bool unresolved(const SetName& s) { return s.shorthand && s.cond.empty(); }

    void resolve_name(SetName& s, std::optional<std::size_t> arity, Location at) {
        const std::string& p = *s.shorthand;
        if (!arity) {
            auto it = arities_.find(p);
            if (it == arities_.end()) {
                throw ParseError(ParseErrorKind::Arity, at.line, at.column,
                                 "cannot determine the arity of predicate " + p + " used as a set");
            }
            arity = it->second.first;
        }
        register_arity(p, *arity, at);
        s = shorthand_set_name(p, *arity);
    }

    void resolve_shorthands(Program& prog) {
        std::size_t next_pending = 0;
        for (std::size_t i = 0; i != prog.rules.size(); ++i) {
            Rule& r = prog.rules[i];
            Location at = rule_locations_[i];
            auto pending_loc = [&]() {
                while (next_pending < pending_.size() && pending_[next_pending].rule < i) {
                    ++next_pending;
                }
                return next_pending < pending_.size() && pending_[next_pending].rule == i ? pending_[next_pending++].where
                                                                                         : at;
            };
            auto arity_of = [](const SetName& s) -> std::optional<std::size_t> {
                if (unresolved(s)) {
                    return std::nullopt;
                }
                return s.vars.size();
            };
            if (auto* intro = std::get_if<SetIntro>(&r.head)) {
                if (unresolved(intro->set)) {
                    auto own = arities_.find(intro->predicate);
                    std::optional<std::size_t> a;
                    if (own != arities_.end()) {
                        a = own->second.first;
                    }
                    resolve_name(intro->set, a, pending_loc());
                }
                register_arity(intro->predicate, intro->set.vars.size(), at);
            }
            for (auto& e : r.body) {
                auto* sa = std::get_if<SetAtom>(&e);
                if (!sa) {
                    continue;
                }
                auto* rel = std::get_if<SetRel>(sa);
                if (!rel) {
                    continue;
                }
                if (unresolved(rel->left)) {
                    resolve_name(rel->left, arity_of(rel->right), pending_loc());
                }
                if (unresolved(rel->right)) {
                    resolve_name(rel->right, arity_of(rel->left), pending_loc());
                }
                if (rel->left.vars.size() != rel->right.vars.size()) {
                    throw ParseError(ParseErrorKind::Arity, at.line, at.column,
                                     "set relation between sets of tuples of different arity");
                }
            }
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::pair<std::size_t, Location>> arities_;
    std::vector<Location> rule_locations_;
    std::vector<PendingShorthand> pending_;
};

} // namespace

Program parse_program(std::string_view src) {
    Parser p(Lexer(src).run());
    return p.program();
}

std::vector<GroundLiteral> parse_literal_list(std::string_view src) {
    Parser p(Lexer(src).run());
    return p.literal_list();
}

} // namespace alogsets
