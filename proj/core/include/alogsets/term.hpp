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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace alogsets {

enum class ArithOp { Add, Sub, Mul };

class Term;
using TermVec = std::vector<Term>;

struct Integer {
    std::int64_t value;
};
struct Constant {
    std::string name;
};
struct Function {
    std::string name;
    TermVec args;
};
struct Variable {
    std::string name;
};
struct Arith {
    ArithOp op;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
};

// Immutable term. The alternative order fixes the total order used for
// output: integers < constants < functions < variables < arithmetic.
class Term {
public:
    using Value = std::variant<Integer, Constant, Function, Variable, Arith>;

    Term() : value_(Integer{0}) {}
    Term(Value v) : value_(std::move(v)) {}

    static Term integer(std::int64_t v) { return Term(Integer{v}); }
    static Term constant(std::string name) { return Term(Constant{std::move(name)}); }
    static Term variable(std::string name) { return Term(Variable{std::move(name)}); }
    static Term function(std::string name, TermVec args);
    static Term arith(ArithOp op, Term lhs, Term rhs);

    const Value& value() const noexcept { return value_; }

    template <class T> bool is() const noexcept { return std::holds_alternative<T>(value_); }
    template <class T> const T& as() const { return std::get<T>(value_); }

    bool is_integer() const noexcept { return is<Integer>(); }
    std::int64_t integer_value() const { return as<Integer>().value; }

    /// Ground iff no variable and no arithmetic symbol occurs anywhere.
    bool is_ground() const;
    bool has_arith() const;
    /// Nesting depth of function symbols; constants and integers have depth 0.
    std::size_t depth() const;

    /// Appends every variable name occurring in the term, first occurrence order, no duplicates.
    void collect_variables(std::vector<std::string>& out) const;

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    Value value_;
};

std::ostream& operator<<(std::ostream& out, const Term& t);
std::string to_string(const Term& t);

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept;
};

} // namespace alogsets
