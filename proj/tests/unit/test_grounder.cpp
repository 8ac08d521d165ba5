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

#include <alogsets/errors.hpp>
#include <alogsets/grounder.hpp>
#include <alogsets/parser.hpp>

#include "helpers.hpp"

using namespace alogsets;
using testing::ground;

namespace {
std::vector<std::string> literal_strings(const std::vector<GroundLiteral>& ls) {
    std::vector<std::string> out;
    for (const auto& l : ls) {
        out.push_back(to_string(l));
    }
    return out;
}
} // namespace

TEST_CASE("P5 grounds to P6 over the range 0..1") {
    GroundProgram g = testing::ground_file("p5.alog");
    Program printed = to_program(g);
    Program p6 = parse_program("p(1) :- card{X : p(X)} = 0.\np(1) :- card{X : p(X)} = 1.\n");
    CHECK(printed.rules == p6.rules);
}

TEST_CASE("grounding is idempotent on ground programs") {
    const std::string src = "p(1) :- card{X : p(X)} != 1, not q.\nq | r(2) :- p(1).\nt(a).\np <= {X : t(X)}.\n";
    Program p = parse_program(src);
    GroundProgram g = ground_program(p);
    CHECK(to_program(g).rules == p.rules);
    CHECK(to_program(ground_program(to_program(g))).rules == p.rules);
}

TEST_CASE("single-constant substitution") {
    DomainConfig d;
    d.constants = {"a"};
    GroundProgram g = ground("q(X) :- r(X).", d);
    CHECK(pretty_print(to_program(g)) == "q(a) :- r(a).\n");
}

TEST_CASE("instances are ordered by rule then binding") {
    GroundProgram g = ground("#int(0,1).\np(X, Y) :- q(X), q(Y).\n");
    CHECK(pretty_print(to_program(g)) ==
          "p(0,0) :- q(0), q(0).\np(0,1) :- q(0), q(1).\np(1,0) :- q(1), q(0).\np(1,1) :- q(1), q(1).\n");
}

TEST_CASE("eval_arith") {
    Term i = Term::variable("I");
    Term e = Term::arith(ArithOp::Add, i, Term::integer(2));
    CHECK(eval_arith(e, {{"I", Term::integer(4)}}) == Term::integer(6));
    try {
        eval_arith(e, {{"I", Term::constant("a")}});
        FAIL("no error");
    } catch (const EvalError& err) {
        CHECK(err.kind() == EvalErrorKind::TypeError);
    }
    CHECK(eval_arith(Term::arith(ArithOp::Mul, Term::integer(3), Term::integer(2)), {}) == Term::integer(6));
    try {
        eval_arith(Term::arith(ArithOp::Mul, Term::integer(INT64_MAX), Term::integer(2)), {});
        FAIL("no error");
    } catch (const EvalError& err) {
        CHECK(err.kind() == EvalErrorKind::Overflow);
    }
}

TEST_CASE("arithmetic escaping the range drops the instance") {
    GroundProgram g = testing::ground_file("e1_bounded.alog");
    std::string printed = pretty_print(to_program(g));
    CHECK(printed.find("even(6) :- even(4).") != std::string::npos);
    CHECK(printed.find("even(8)") == std::string::npos);
    CHECK(printed.find(":- even(5)") == std::string::npos);
}

TEST_CASE("non-numeric arithmetic drops the instance") {
    GroundProgram g = ground("q(a). q(1). p(X+1) :- q(X).\n#int(0,2).");
    CHECK(pretty_print(to_program(g)) == "q(a).\nq(1).\np(1) :- q(0).\np(2) :- q(1).\n");
}

TEST_CASE("false builtin comparisons delete instances, true ones vanish") {
    GroundProgram g = ground("#int(0,2).\np(X) :- q(X), X >= 1, X != 2.\n");
    CHECK(pretty_print(to_program(g)) == "p(1) :- q(1).\n");
}

TEST_CASE("herbrand atoms") {
    DomainConfig d;
    d.int_range = IntRange{0, 1};
    GroundProgram g = ground("p(1) :- card{X : p(X)} != 1.", d);
    CHECK(literal_strings(herbrand_atoms(g)) == std::vector<std::string>{"p(0)", "-p(0)", "p(1)", "-p(1)"});
    CHECK(herbrand_atoms(ground("")).empty());
}

TEST_CASE("herbrand atoms of the graduation knowledge base") {
    GroundProgram g = testing::ground_file("graduate.alog");
    auto atoms = herbrand_atoms(g);
    // Four constants: ready_to_graduate/1, required/1 and taken/2 in both polarities.
    CHECK(atoms.size() == 2 * (4 + 4 + 16));
    CHECK(g.u().terms() == std::vector<Term>{Term::constant("cs1"), Term::constant("cs2"), Term::constant("john"),
                                             Term::constant("mike")});
}

TEST_CASE("default range spans the integers of the program") {
    CHECK(effective_int_range(parse_program("p(1). q(X) :- p(X), X < 4."), {}) == IntRange{1, 4});
    CHECK_FALSE(effective_int_range(parse_program("p(a)."), {}).has_value());
    DomainConfig d;
    d.int_range = IntRange{0, 9};
    CHECK(effective_int_range(parse_program("#int(0,1). p(1)."), d) == IntRange{0, 9});
}

TEST_CASE("renaming a set variable commutes with grounding") {
    GroundProgram a = ground("#int(0,2).\nq :- card{X : p(X)} > 1.\np(1).");
    GroundProgram b = ground("#int(0,2).\nq :- card{Y : p(Y)} > 1.\np(1).");
    const auto& sa = std::get<GroundAggCmp>(std::get<GroundSetAtom>(a.rules[0].body[0]));
    const auto& sb = std::get<GroundAggCmp>(std::get<GroundSetAtom>(b.rules[0].body[0]));
    CHECK(sa.set.domain == sb.set.domain);
    REQUIRE(sa.set.instances.size() == sb.set.instances.size());
    for (std::size_t i = 0; i != sa.set.instances.size(); ++i) {
        CHECK(sa.set.instances[i].tuple == sb.set.instances[i].tuple);
        CHECK(sa.set.instances[i].cond == sb.set.instances[i].cond);
    }
}

TEST_CASE("set name instance tables") {
    GroundProgram g = ground("#int(0,1).\nq :- card{X, Y : e(X, Y), -f(Y)} > 0.\nf(0).");
    const auto& s = std::get<GroundAggCmp>(std::get<GroundSetAtom>(g.rules[0].body[0])).set;
    REQUIRE(s.instances.size() == 4);
    for (const auto& inst : s.instances) {
        CHECK(inst.cond.size() == 2);
        CHECK(g.u().tuple(inst.tuple).size() == 2);
    }
}

TEST_CASE("unsafe rules are scope errors") {
    try {
        ground("q(1). p :- not q(X).");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::Scope);
    }
    CHECK_NOTHROW(ground("q(1). -p(X) :- not p(X)."));
}

TEST_CASE("instance and universe caps") {
    DomainConfig d;
    d.max_instances = 100;
    CHECK_THROWS_AS(ground("#int(0,9).\np(X, Y, Z) :- q(X), q(Y), q(Z).", d), CapExceeded);
    DomainConfig u;
    u.max_universe = 50;
    CHECK_THROWS_AS(ground("#int(0,9).\np(X, Y) :- q(X), q(Y).", u), CapExceeded);
    DomainConfig r;
    r.int_range = IntRange{0, 1'000'000};
    CHECK_THROWS_AS(ground("p(1).", r), CapExceeded);
}

TEST_CASE("function terms join the pool") {
    GroundProgram g = ground("p(f(a)). q(X) :- p(X).");
    CHECK(pretty_print(to_program(g)) == "p(f(a)).\nq(a) :- p(a).\nq(f(a)) :- p(f(a)).\n");
}
