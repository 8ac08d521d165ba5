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
#include <catch_amalgamated.hpp>

#include <alogsets/term.hpp>

using namespace alogsets;

TEST_CASE("terms order integers before constants before functions") {
    Term i = Term::integer(5);
    Term c = Term::constant("a");
    Term f = Term::function("f", {Term::integer(0)});
    CHECK(i < c);
    CHECK(c < f);
    CHECK(Term::integer(-1) < Term::integer(0));
    CHECK(Term::constant("a") < Term::constant("b"));
}

TEST_CASE("function with no arguments is a constant") {
    CHECK(Term::function("a", {}) == Term::constant("a"));
}

TEST_CASE("groundness and variables") {
    Term x = Term::variable("X");
    Term t = Term::function("f", {x, Term::arith(ArithOp::Add, Term::variable("Y"), x)});
    CHECK_FALSE(t.is_ground());
    CHECK(t.has_arith());
    std::vector<std::string> vars;
    t.collect_variables(vars);
    CHECK(vars == std::vector<std::string>{"X", "Y"});
    CHECK(Term::function("f", {Term::function("g", {Term::constant("a")})}).depth() == 2);
    CHECK(Term::constant("a").depth() == 0);
}

TEST_CASE("arithmetic prints with minimal parentheses") {
    Term x = Term::variable("X");
    Term two = Term::integer(2);
    CHECK(to_string(Term::arith(ArithOp::Add, x, two)) == "X+2");
    CHECK(to_string(Term::arith(ArithOp::Mul, Term::arith(ArithOp::Add, x, two), two)) == "(X+2)*2");
    CHECK(to_string(Term::arith(ArithOp::Sub, x, Term::arith(ArithOp::Sub, x, two))) == "X-(X-2)");
    CHECK(to_string(Term::arith(ArithOp::Add, x, Term::integer(-3))) == "X+(-3)");
    CHECK(to_string(Term::function("f", {Term::constant("a"), Term::integer(1)})) == "f(a,1)");
}

TEST_CASE("term hash agrees with equality") {
    TermHash h;
    CHECK(h(Term::function("f", {Term::integer(1)})) == h(Term::function("f", {Term::integer(1)})));
}
