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
#include <alogsets/errors.hpp>
#include <alogsets/model.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace alogsets {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::Lexical: return "lexical error";
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::Scope: return "scope error";
    case ParseErrorKind::Arity: return "arity error";
    }
    return "error";
}

namespace {
std::string located(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg) {
    std::ostringstream out;
    if (line != 0) {
        out << line << ':' << column << ": ";
    }
    out << to_string(kind) << ": " << msg;
    return out.str();
}
} // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string message)
    : Error(located(kind, line, column, message))
    , kind_(kind)
    , line_(line)
    , column_(column)
    , message_(std::move(message)) {}

CapExceeded::CapExceeded(CapKind kind, std::string what, std::size_t limit, std::size_t requested)
    : Error(what + " exceeds limit " + std::to_string(limit) + " (requested " + std::to_string(requested) + ")")
    , kind_(kind)
    , limit_(limit)
    , requested_(requested) {}

bool Literal::is_ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

void Literal::collect_variables(std::vector<std::string>& out) const {
    for (const auto& a : args) {
        a.collect_variables(out);
    }
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) {
        return c;
    }
    if (auto c = std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
        c != 0) {
        return c;
    }
    return a.negated <=> b.negated;
}

GroundLiteral::GroundLiteral(Literal lit) : lit_(std::move(lit)) {
    if (!lit_.is_ground()) {
        throw std::invalid_argument("literal is not ground: " + to_string(lit_));
    }
}

GroundLiteral::GroundLiteral(bool negated, std::string predicate, TermVec args)
    : GroundLiteral(Literal{negated, std::move(predicate), std::move(args)}) {}

GroundLiteral complement(const GroundLiteral& l) {
    return GroundLiteral(!l.negated(), l.predicate(), l.args());
}

bool is_consistent(std::span<const GroundLiteral> literals) {
    std::vector<GroundLiteral> sorted(literals.begin(), literals.end());
    std::sort(sorted.begin(), sorted.end());
    // Complements sort next to each other.
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& a = sorted[i - 1];
        const auto& b = sorted[i];
        if (a.negated() != b.negated() && a.predicate() == b.predicate() && a.args() == b.args()) {
            return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& out, const Literal& l) {
    if (l.negated) {
        out << '-';
    }
    out << l.predicate;
    if (!l.args.empty()) {
        out << '(';
        for (std::size_t i = 0; i != l.args.size(); ++i) {
            out << (i ? "," : "") << l.args[i];
        }
        out << ')';
    }
    return out;
}

std::ostream& operator<<(std::ostream& out, const GroundLiteral& l) {
    return out << l.literal();
}

std::string to_string(const Literal& l) {
    std::ostringstream out;
    out << l;
    return out.str();
}

std::string to_string(const GroundLiteral& l) {
    return to_string(l.literal());
}

SetName shorthand_set_name(const std::string& predicate, std::size_t arity) {
    SetName s;
    Literal cond{false, predicate, {}};
    for (std::size_t i = 0; i != arity; ++i) {
        s.vars.push_back("_" + std::to_string(i + 1));
        cond.args.push_back(Term::variable(s.vars.back()));
    }
    s.cond.push_back(std::move(cond));
    s.shorthand = predicate;
    return s;
}

const char* to_string(AggregateFn f) {
    switch (f) {
    case AggregateFn::Card: return "card";
    case AggregateFn::Sum: return "sum";
    case AggregateFn::Min: return "min";
    case AggregateFn::Max: return "max";
    }
    return "?";
}

const char* to_string(CmpRel r) {
    switch (r) {
    case CmpRel::Gt: return ">";
    case CmpRel::Ge: return ">=";
    case CmpRel::Lt: return "<";
    case CmpRel::Le: return "<=";
    case CmpRel::Eq: return "=";
    case CmpRel::Ne: return "!=";
    }
    return "?";
}

namespace {
template <class T>
bool compare_ordered(const T& lhs, CmpRel rel, const T& rhs) {
    switch (rel) {
    case CmpRel::Gt: return lhs > rhs;
    case CmpRel::Ge: return lhs >= rhs;
    case CmpRel::Lt: return lhs < rhs;
    case CmpRel::Le: return lhs <= rhs;
    case CmpRel::Eq: return lhs == rhs;
    case CmpRel::Ne: return lhs != rhs;
    }
    return false;
}
} // namespace

bool compare(std::int64_t lhs, CmpRel rel, std::int64_t rhs) {
    return compare_ordered(lhs, rel, rhs);
}

bool compare(const Term& lhs, CmpRel rel, const Term& rhs) {
    return compare_ordered(lhs, rel, rhs);
}

std::vector<const SetName*> set_names(const SetAtom& atom) {
    return std::visit([](const auto& a) -> std::vector<const SetName*> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AggCmp>) {
            return {&a.set};
        } else {
            return {&a.left, &a.right};
        }
    }, atom);
}

const char* to_string(TruthValue v) {
    switch (v) {
    case TruthValue::False: return "false";
    case TruthValue::Undefined: return "undefined";
    case TruthValue::True: return "true";
    }
    return "?";
}

TruthValue conjoin(TruthValue a, TruthValue b) {
    if (a == TruthValue::False || b == TruthValue::False) {
        return TruthValue::False;
    }
    if (a == TruthValue::Undefined || b == TruthValue::Undefined) {
        return TruthValue::Undefined;
    }
    return TruthValue::True;
}

} // namespace alogsets
