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
#pragma once

#include <alogsets/term.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace alogsets {

// A predicate atom, possibly under classical negation. Arguments may contain
// variables and arithmetic (the "regular" literals of a program).
struct Literal {
    bool negated = false;
    std::string predicate;
    TermVec args;

    bool is_ground() const;
    void collect_variables(std::vector<std::string>& out) const;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

/// A literal whose arguments are all ground. Ordering: predicate name, then
/// argument tuple, then positive before classically negated.
class GroundLiteral {
public:
    GroundLiteral() = default;
    /// Throws std::invalid_argument if `lit` is not ground.
    explicit GroundLiteral(Literal lit);
    GroundLiteral(bool negated, std::string predicate, TermVec args);

    bool negated() const noexcept { return lit_.negated; }
    const std::string& predicate() const noexcept { return lit_.predicate; }
    const TermVec& args() const noexcept { return lit_.args; }
    std::size_t arity() const noexcept { return lit_.args.size(); }
    const Literal& literal() const noexcept { return lit_; }

    friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
    friend std::strong_ordering operator<=>(const GroundLiteral& a, const GroundLiteral& b) {
        return a.lit_ <=> b.lit_;
    }

private:
    Literal lit_;
};

GroundLiteral complement(const GroundLiteral& l);
bool is_consistent(std::span<const GroundLiteral> literals);

std::ostream& operator<<(std::ostream& out, const Literal& l);
std::ostream& operator<<(std::ostream& out, const GroundLiteral& l);
std::string to_string(const Literal& l);
std::string to_string(const GroundLiteral& l);

// {X1,...,Xn : cond}. `vars` are the set variables bound here; any other
// variable in `cond` belongs to the enclosing rule and is substituted by the
// grounder. `shorthand` names the predicate p when the set name was written
// as `p` in `p <= S` and friends.
struct SetName {
    std::vector<std::string> vars;
    std::vector<Literal> cond;
    std::optional<std::string> shorthand;

    // `shorthand` is presentation only.
    friend bool operator==(const SetName& a, const SetName& b) {
        return a.vars == b.vars && a.cond == b.cond;
    }
};

/// Builds {_1,...,_n : p(_1,...,_n)} for a predicate used as a set.
SetName shorthand_set_name(const std::string& predicate, std::size_t arity);

enum class AggregateFn { Card, Sum, Min, Max };
enum class CmpRel { Gt, Ge, Lt, Le, Eq, Ne };
enum class SetRelOp { Subset, SubsetEq, Equal };

const char* to_string(AggregateFn f);
const char* to_string(CmpRel r);
bool compare(std::int64_t lhs, CmpRel rel, std::int64_t rhs);
bool compare(const Term& lhs, CmpRel rel, const Term& rhs);

// f(S) rel bound. Before grounding the bound may be any term; the grounder
// leaves an integer.
struct AggCmp {
    AggregateFn fn;
    SetName set;
    CmpRel rel;
    Term bound;
    friend bool operator==(const AggCmp&, const AggCmp&) = default;
};

struct AggAggCmp {
    AggregateFn left_fn;
    SetName left;
    CmpRel rel;
    AggregateFn right_fn;
    SetName right;
    friend bool operator==(const AggAggCmp&, const AggAggCmp&) = default;
};

struct SetRel {
    SetName left;
    SetRelOp rel;
    SetName right;
    friend bool operator==(const SetRel&, const SetRel&) = default;
};

using SetAtom = std::variant<AggCmp, AggAggCmp, SetRel>;

/// Set names of a set atom, left to right.
std::vector<const SetName*> set_names(const SetAtom& atom);

struct Pos {
    Literal lit;
    friend bool operator==(const Pos&, const Pos&) = default;
};
struct Naf {
    Literal lit;
    friend bool operator==(const Naf&, const Naf&) = default;
};
// Builtin comparison between terms; only present before grounding.
struct Comparison {
    Term left;
    CmpRel rel;
    Term right;
    friend bool operator==(const Comparison&, const Comparison&) = default;
};

using BodyElement = std::variant<Pos, Naf, SetAtom, Comparison>;

struct Disjunction {
    std::vector<Literal> literals;
    friend bool operator==(const Disjunction&, const Disjunction&) = default;
};

enum class IntroKind { SubsetOf, SupersetOf, Equals };

// p <= S, S <= p or p = S in a rule head.
struct SetIntro {
    IntroKind kind;
    std::string predicate;
    SetName set;
    friend bool operator==(const SetIntro&, const SetIntro&) = default;
};

using Head = std::variant<Disjunction, SetIntro>;

struct Rule {
    Head head;
    std::vector<BodyElement> body;
    friend bool operator==(const Rule&, const Rule&) = default;
};

struct IntRange {
    std::int64_t min;
    std::int64_t max;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct Signature {
    std::map<std::string, std::size_t> arities;
    std::optional<IntRange> int_range;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct Program {
    std::vector<Rule> rules;
    Signature signature;
    friend bool operator==(const Program&, const Program&) = default;
};

enum class TruthValue { False, Undefined, True };

const char* to_string(TruthValue v);

/// Three-valued conjunction.
TruthValue conjoin(TruthValue a, TruthValue b);

} // namespace alogsets
