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
#include <alogsets/random_program.hpp>
#include <alogsets/slog_plus.hpp>
#include <alogsets/solver.hpp>

#include "helpers.hpp"

using namespace alogsets;
using testing::ground_file;
using testing::interp;
using testing::squash;

namespace {

const GroundSetAtom& atom(const GroundProgram& g, std::size_t rule) {
    return std::get<GroundSetAtom>(g.rules.at(rule).body.at(0));
}

std::vector<std::string> describe(const GroundProgram& g, const std::vector<SupportVector>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) {
        std::string s = "[";
        for (std::size_t i = 0; i != w.coords.size(); ++i) {
            Interpretation c(g.u().size(), w.coords[i]);
            s += (i ? ", " : "") + format_interpretation(g.u(), c);
        }
        out.push_back(s + "]");
    }
    return out;
}

} // namespace

TEST_CASE("minimal supports of P3's atom") {
    GroundProgram g = ground_file("p3.alog");
    auto a2 = interp(g, "p(1), p(2), p(3)");
    CHECK(describe(g, minimal_supports(atom(g, 0), a2, g.u())) ==
          std::vector<std::string>{"[{p(1), p(2)}]", "[{p(1), p(3)}]", "[{p(2), p(3)}]"});
    CHECK(describe(g, minimal_supports(atom(g, 0), interp(g, "p(1)"), g.u())).empty());
}

TEST_CASE("minimal supports of trivially true and undefined atoms") {
    GroundProgram g = ground_file("weak_ge.alog");
    CHECK(describe(g, minimal_supports(atom(g, 0), interp(g, "p(0)"), g.u())) == std::vector<std::string>{"[{}]"});
    GroundProgram m = testing::ground("q :- min{X : p(X)} = 0.\np(0).\n");
    CHECK(describe(m, minimal_supports(atom(m, 0), interp(m, "p(0)"), m.u())) ==
          std::vector<std::string>{"[{p(0)}]"});
    CHECK(minimal_supports(atom(m, 0), interp(m, ""), m.u()).empty());
}

TEST_CASE("minimal supports of a subset relation") {
    GroundProgram g = ground_file("p4.alog");
    CHECK(describe(g, minimal_supports(atom(g, 0), interp(g, "p(a), q(a)"), g.u())) ==
          std::vector<std::string>{"[{}, {q(a)}]"});
    CHECK(describe(g, minimal_supports(atom(g, 0), interp(g, "q(a)"), g.u())) ==
          std::vector<std::string>{"[{}, {}]"});
}

TEST_CASE("every enlargement of a minimal support within A satisfies the atom") {
    GroundProgram g = ground_file("p3.alog");
    auto a2 = interp(g, "p(1), p(2), p(3)");
    for (const auto& w : minimal_supports(atom(g, 0), a2, g.u())) {
        CHECK(satisfied_by_vector(atom(g, 0), w, g.u()));
        SupportVector smaller = w;
        smaller.coords[0].pop_back();
        CHECK_FALSE(satisfied_by_vector(atom(g, 0), smaller, g.u()));
    }
}

TEST_CASE("weak set reducts of P3 wrt A2") {
    GroundProgram g = ground_file("p3.alog");
    auto a2 = interp(g, "p(1), p(2), p(3)");
    WeakReducts it(g, a2);
    CHECK(it.total() == 9);
    auto all = weak_set_reducts(g, a2);
    CHECK(all.size() == 9);
    CHECK(squash(format_basic(all.front())) == "p(3) :- p(1), p(2). p(2) :- p(1), p(2). p(1).");
    auto check = check_slogp(g, a2);
    CHECK_FALSE(check.answer_set);
    CHECK(check.tried == 9);
    CHECK(check.total == 9);
    CHECK(is_slogp_answer_set(g, interp(g, "p(1)")));
}

TEST_CASE("weak reduct enumeration respects the cap") {
    GroundProgram g = ground_file("p3.alog");
    SlogOptions o;
    o.max_reducts = 4;
    WeakReducts it(g, interp(g, "p(1), p(2), p(3)"), o);
    CHECK_THROWS_AS(
        [&] {
            while (it.next()) {
            }
        }(),
        CapExceeded);
}

TEST_CASE("slog+ answers of the self-referential examples") {
    GroundProgram p0 = ground_file("p0.alog");
    CHECK_FALSE(is_slogp_answer_set(p0, interp(p0, "p(1)")));
    CHECK_FALSE(is_slogp_answer_set(p0, interp(p0, "")));
    GroundProgram p2 = ground_file("p2.alog");
    auto c = check_slogp(p2, interp(p2, "p(1)"));
    CHECK(c.answer_set);
    REQUIRE(c.witness);
    CHECK(squash(format_basic(*c.witness)) == "p(1).");
    GroundProgram gt = ground_file("weak_gt.alog");
    CHECK_FALSE(is_slogp_answer_set(gt, interp(gt, "p(0)")));
    GroundProgram ge = ground_file("weak_ge.alog");
    CHECK(is_slogp_answer_set(ge, interp(ge, "p(0)")));
}

TEST_CASE("set-introduction heads are reduced before weak reducts") {
    GroundProgram g = ground_file("p9.alog");
    auto c = check_slogp(g, interp(g, "q(a), p(a)"));
    CHECK(c.answer_set);
    REQUIRE(c.witness);
    CHECK(squash(format_basic(*c.witness)) == "q(a). p(a).");
}

TEST_CASE("the non-enumerating decision agrees with enumeration") {
    RandomProgramOptions o;
    o.max_candidates = 8;
    std::size_t decided = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto inst = random_instance(seed, o);
        const GroundProgram& g = inst.ground;
        auto cands = candidate_universe(g);
        for (std::uint64_t m = 0; m != (std::uint64_t{1} << cands.size()); ++m) {
            Interpretation a(g.u().size());
            for (std::size_t i = 0; i != cands.size(); ++i) {
                if ((m >> i) & 1u) {
                    a.insert(cands[i]);
                }
            }
            if (!is_consistent(a, g.u())) {
                continue;
            }
            WeakReducts gen(set_intro_reduct(g, a), a);
            if (gen.total() > 5000) {
                continue;
            }
            std::optional<BasicProgram> witness;
            auto verdict = gen.decide(a, &witness);
            if (!verdict) {
                continue;
            }
            ++decided;
            bool agrees = *verdict == check_slogp(g, a).answer_set;
            bool witnessed = !*verdict || (witness && is_answer_set_basic(a, *witness));
            if (!agrees || !witnessed) {
                FAIL("seed " << seed << " A = " << format_interpretation(g.u(), a) << "\n"
                              << pretty_print(inst.program));
            }
        }
    }
    CHECK(decided > 1000);
}

TEST_CASE("past the reduct cap the check decides without enumerating") {
    GroundProgram g = ground_file("p3.alog");
    SlogOptions o;
    o.max_reducts = 4;
    auto c = check_slogp(g, interp(g, "p(1), p(2), p(3)"), o);
    CHECK_FALSE(c.answer_set);
    CHECK_FALSE(c.enumerated);
    CHECK(c.total == 9);
    CHECK(c.tried == 0);
}
