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

#include <alogsets/alog.hpp>

#include "helpers.hpp"

using namespace alogsets;
using testing::ground_file;
using testing::interp;
using testing::squash;

TEST_CASE("set reducts of P4") {
    GroundProgram g = ground_file("p4.alog");
    CHECK(squash(format_basic(alog_reduct(g, interp(g, "q(a)")))) == "p(a) :- q(a). q(a).");
    CHECK(squash(format_basic(alog_reduct(g, interp(g, "p(a), q(a)")))) == "p(a) :- p(a), q(a). q(a).");
    CHECK_FALSE(is_alog_answer_set(g, interp(g, "q(a)")));
    CHECK_FALSE(is_alog_answer_set(g, interp(g, "p(a), q(a)")));
}

TEST_CASE("set reduct drops rules whose set atom is false or undefined") {
    GroundProgram g = testing::ground("q :- min{X : p(X)} = 0.\np(1).\n");
    CHECK(squash(format_basic(set_reduct(g, interp(g, "p(1)")))) == "p(1).");
    GroundProgram e = ground_file("e1_small.alog");
    CHECK(squash(format_basic(set_reduct(e, interp(e, "even(0), even(2), q")))) ==
          "even(0). even(2) :- even(0). q :- even(0), even(2).");
}

TEST_CASE("set-introduction reduct of P9") {
    GroundProgram g = ground_file("p9.alog");
    GroundProgram r = set_intro_reduct(g, interp(g, "q(a), p(a)"));
    CHECK(squash(pretty_print(to_program(r))) == "q(a). p(a).");
    GroundProgram none = set_intro_reduct(g, interp(g, "q(a)"));
    CHECK(squash(pretty_print(to_program(none))) == "q(a).");
    CHECK(is_alog_answer_set(g, interp(g, "q(a)")));
    CHECK(is_alog_answer_set(g, interp(g, "q(a), p(a)")));
    CHECK_FALSE(is_alog_answer_set(g, interp(g, "p(a)")));
}

TEST_CASE("set-introduction equality and superset heads") {
    GroundProgram eq = ground_file("synonyms.alog");
    CHECK(is_alog_answer_set(eq, interp(eq, "spanish, car(a), car(b), carro(a), carro(b)")));
    CHECK_FALSE(is_alog_answer_set(eq, interp(eq, "spanish, car(a), car(b), carro(a)")));
    GroundProgram sup = testing::ground("q(a).\n{X : q(X)} <= p.\n");
    CHECK(is_alog_answer_set(sup, interp(sup, "q(a), p(a)")));
    CHECK_FALSE(is_alog_answer_set(sup, interp(sup, "q(a)")));
}

TEST_CASE("alog answer sets of the self-referential examples") {
    for (const char* file : {"p0.alog", "p1.alog", "p2.alog"}) {
        GroundProgram g = ground_file(file);
        CHECK_FALSE(is_alog_answer_set(g, interp(g, "p(1)")));
        CHECK_FALSE(is_alog_answer_set(g, interp(g, "")));
    }
    GroundProgram p3 = ground_file("p3.alog");
    CHECK(is_alog_answer_set(p3, interp(p3, "p(1)")));
    CHECK_FALSE(is_alog_answer_set(p3, interp(p3, "p(1), p(2), p(3)")));
}

TEST_CASE("graduate program under alog") {
    GroundProgram g = ground_file("graduate.alog");
    auto facts = std::string("taken(mike,cs1), taken(mike,cs2), taken(john,cs2), required(cs1), required(cs2), ");
    CHECK(is_alog_answer_set(g, interp(g, facts + "ready_to_graduate(mike), -ready_to_graduate(john), -ready_to_graduate(cs1), -ready_to_graduate(cs2)")));
    CHECK_FALSE(is_alog_answer_set(g, interp(g, facts + "ready_to_graduate(john), ready_to_graduate(mike)")));
}

TEST_CASE("inconsistent candidates are rejected") {
    GroundProgram g = testing::ground("a.\n-a :- not b.\n");
    CHECK_FALSE(is_alog_answer_set(g, interp(g, "a, -a")));
}
