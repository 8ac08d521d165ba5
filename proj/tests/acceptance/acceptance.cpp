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
// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <alogsets/alogsets.hpp>

#include "helpers.hpp"
#include "oracle.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace alogsets;
using Sets = std::vector<std::string>;

namespace {

constexpr std::uint64_t kSeed = 2026;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        pass = false;
        notes.push_back("  failed: " + std::move(why));
    }
    void note(std::string what) { notes.push_back("  " + std::move(what)); }
};

std::string join(const Sets& s) {
    if (s.empty()) {
        return "(none)";
    }
    std::string out;
    for (const auto& x : s) {
        out += (out.empty() ? "" : " ") + x;
    }
    return out;
}

std::string strip(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c != ' ' && c != '\n' && c != '\t' && c != '\r') {
            out += c;
        }
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Golden {
    const char* file;
    std::optional<Sets> alog;
    std::optional<Sets> slog;
};

const std::vector<Golden>& goldens() {
    static const std::vector<Golden> g = {
        {"p0.alog", Sets{}, Sets{}},
        {"p1.alog", Sets{}, Sets{}},
        {"p2.alog", Sets{}, Sets{"{p(1)}"}},
        {"p3.alog", std::nullopt, Sets{"{p(1)}"}},
        {"p4.alog", Sets{}, Sets{}},
        {"p9.alog", Sets{"{q(a)}", "{p(a), q(a)}"}, Sets{"{q(a)}", "{p(a), q(a)}"}},
        {"weak_ge.alog", std::nullopt, Sets{"{p(0)}"}},
        {"p5.alog", Sets{}, Sets{}},
        {"p6.alog", Sets{}, Sets{}},
        {"graduate.alog", std::nullopt, std::nullopt},
        {"synonyms.alog", Sets{"{car(a), car(b), carro(a), carro(b), spanish}"},
         Sets{"{car(a), car(b), carro(a), carro(b), spanish}"}},
    };
    return g;
}

bool graduate_ok(const Sets& sets) {
    if (sets.size() != 1) {
        return false;
    }
    const std::string& a = sets[0];
    return a.find(" ready_to_graduate(mike)") != std::string::npos &&
           a.find("-ready_to_graduate(mike)") == std::string::npos &&
           a.find("-ready_to_graduate(john)") != std::string::npos &&
           a.find(" ready_to_graduate(john)") == std::string::npos;
}

Verdict criterion1(std::vector<std::pair<GroundProgram, std::vector<Interpretation>>>& found) {
    Verdict v;
    for (const auto& c : goldens()) {
        auto t0 = std::chrono::steady_clock::now();
        GroundProgram g = testing::ground_file(c.file);
        auto alog = solve(g, Semantics::Alog);
        auto slog = solve(g, Semantics::SlogPlus);
        double dt = seconds_since(t0);
        Sets at = testing::formatted(g, alog);
        Sets st = testing::formatted(g, slog);
        std::ostringstream line;
        line << c.file << ": alog " << join(at) << "; slog+ " << join(st) << " (" << dt << " s)";
        v.note(line.str());
        if (dt >= 1.0) {
            v.fail(std::string(c.file) + " took " + std::to_string(dt) + " s");
        }
        if (std::string(c.file) == "graduate.alog") {
            if (!graduate_ok(at) || !graduate_ok(st)) {
                v.fail("graduate: expected mike ready and john not ready");
            }
        }
        if (c.alog && at != *c.alog) {
            v.fail(std::string(c.file) + " under alog: expected " + join(*c.alog) + ", got " + join(at));
        }
        if (c.slog && st != *c.slog) {
            v.fail(std::string(c.file) + " under slog+: expected " + join(*c.slog) + ", got " + join(st));
            for (const auto& a : slog) {
                auto chk = check_slogp(g, a);
                if (chk.witness) {
                    v.note("witnessing weak set reduct for " + format_interpretation(g.u(), a) + ": " +
                           testing::squash(format_basic(*chk.witness)));
                }
            }
        }
        found.emplace_back(g, alog);
        found.emplace_back(g, slog);
    }
    return v;
}

Verdict criterion2() {
    Verdict v;
    GroundProgram p4 = testing::ground_file("p4.alog");
    auto r1 = format_basic(alog_reduct(p4, testing::interp(p4, "q(a)")));
    auto r2 = format_basic(alog_reduct(p4, testing::interp(p4, "q(a), p(a)")));
    const std::string d1 = "p(a) :- q(a).\nq(a).\n";
    const std::string d2 = "p(a) :- p(a),q(a).\nq(a).\n";
    v.note("P4 reduct wrt S1: " + testing::squash(r1));
    v.note("P4 reduct wrt S2: " + testing::squash(r2));
    if (strip(r1) != strip(d1)) {
        v.fail("P4 reduct wrt S1 differs from the displayed program");
    }
    if (strip(r2) != strip(d2)) {
        v.fail("P4 reduct wrt S2 differs from the displayed program");
    }

    GroundProgram p3 = testing::ground_file("p3.alog");
    auto a2 = testing::interp(p3, "p(1), p(2), p(3)");
    const auto& atom = std::get<GroundSetAtom>(p3.rules.at(0).body.at(0));
    Sets supports;
    for (const auto& w : minimal_supports(atom, a2, p3.u())) {
        std::string s;
        for (const auto& coord : w.coords) {
            s += format_interpretation(p3.u(), Interpretation(p3.u().size(), coord));
        }
        supports.push_back(s);
    }
    v.note("P3 minimal supports in A2: " + join(supports));
    if (supports != Sets{"{p(1), p(2)}", "{p(1), p(3)}", "{p(2), p(3)}"}) {
        v.fail("P3 minimal supports are not exactly M1, M2, M3");
    }
    auto check = check_slogp(p3, a2);
    v.note("P3 weak set reducts wrt A2: " + std::to_string(check.total) + ", tried " + std::to_string(check.tried));
    if (check.total != 9 || check.tried != 9 || check.answer_set) {
        v.fail("P3 should have nine weak set reducts, none witnessing A2");
    }
    return v;
}

AuditOptions audit_options() {
    AuditOptions o;
    o.programs.max_rules = 6;
    o.programs.max_candidates = 14;
    return o;
}

void report_audit(Verdict& v, const AuditReport& r, double dt) {
    std::ostringstream line;
    line << r.suite << ": " << r.programs << " programs, " << r.checks << " checks, " << r.skipped << " skipped, "
         << r.violations.size() << " violations, " << r.findings.size() << " findings (" << dt << " s)";
    v.note(line.str());
    for (const auto& f : r.violations) {
        v.fail("seed " + std::to_string(f.seed) + ": " + f.detail + "\n" + f.program);
    }
    if (dt > 600) {
        v.fail(r.suite + " exceeded 10 minutes");
    }
}

template <class F> AuditReport timed(F f, double& dt) {
    auto t0 = std::chrono::steady_clock::now();
    AuditReport r = f();
    dt = seconds_since(t0);
    return r;
}

Verdict criterion3() {
    Verdict v;
    double dt = 0;
    auto r = timed([] { return audit_alog_within_slog(kSeed, 500, audit_options()); }, dt);
    report_audit(v, r, dt);
    return v;
}

Verdict criterion4(const std::vector<std::pair<GroundProgram, std::vector<Interpretation>>>& golden_sets) {
    Verdict v;
    std::size_t checks = 0;
    for (const auto& [g, sets] : golden_sets) {
        for (const auto& a : sets) {
            checks += 2;
            if (!audit_rule_satisfaction(g, a)) {
                v.fail("golden answer set " + format_interpretation(g.u(), a) + " violates a rule");
            }
            if (!audit_supportedness(g, a)) {
                v.fail("golden answer set " + format_interpretation(g.u(), a) + " has an unsupported literal");
            }
        }
        if (!g.has_set_intro()) {
            ++checks;
            if (!audit_antichain(sets)) {
                v.fail("golden answer sets are not an anti-chain");
            }
        }
    }
    v.note("golden corpus: " + std::to_string(checks) + " checks");
    double dt = 0;
    auto r = timed([] { return audit_answer_set_properties(kSeed, 500, audit_options()); }, dt);
    report_audit(v, r, dt);
    return v;
}

Verdict criterion5(const std::string& artifact) {
    Verdict v;
    std::ofstream out(artifact);
    out << "Splitting equivalence findings, seed " << kSeed << "\n";
    for (Semantics s : {Semantics::Alog, Semantics::SlogPlus}) {
        double dt = 0;
        auto r = timed([s] { return audit_splitting(kSeed, 500, s, audit_options()); }, dt);
        report_audit(v, r, dt);
        out << "\n[" << to_string(s) << "] " << r.programs << " pairs, " << r.violations.size() << " violations, "
            << r.findings.size() << " findings\n";
        for (const auto& f : r.findings) {
            out << "seed " << f.seed << ": " << f.detail << "\n" << f.program << "\n";
        }
        for (const auto& f : r.violations) {
            out << "VIOLATION seed " << f.seed << ": " << f.detail << "\n" << f.program << "\n";
        }
    }
    v.note("report written to " + artifact);
    return v;
}

Verdict criterion6() {
    Verdict v;
    double dt = 0;
    auto r = timed([] { return audit_basic_oracle(kSeed, 200, audit_options()); }, dt);
    report_audit(v, r, dt);

    // The basic solver itself against the textbook definition.
    RandomProgramOptions o;
    o.set_atoms = false;
    o.set_intro = false;
    o.max_universe = 12;
    std::size_t agree = 0;
    for (std::size_t i = 0; i != 200; ++i) {
        auto inst = random_instance(audit_seed(kSeed + 1, i), o);
        auto p = to_basic(inst.ground);
        std::vector<oracle::LitSet> got;
        for (const auto& a : answer_sets_basic(p)) {
            got.push_back(oracle::to_set(a));
        }
        auto want = oracle::answer_sets(p);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got == want) {
            ++agree;
        } else {
            v.fail("basic answer sets disagree with the textbook oracle:\n" + pretty_print(inst.program));
        }
    }
    v.note("textbook oracle: " + std::to_string(agree) + "/200 programs agree");

    auto c = timed([] { return audit_candidate_restriction(kSeed, 100, audit_options()); }, dt);
    report_audit(v, c, dt);
    return v;
}

Verdict criterion7() {
    Verdict v;
    GroundProgram g = testing::ground_file("e2_bounded.alog");
    const std::string expected = "{even(0), even(2), even(4), even(6), q}";
    for (Semantics s : {Semantics::Alog, Semantics::SlogPlus}) {
        Sets got = testing::formatted(g, solve(g, s));
        v.note(std::string(to_string(s)) + ": " + join(got));
        if (got != Sets{expected}) {
            v.fail(std::string("bounded card > 0 analog under ") + to_string(s) + " should give " + expected);
        }
    }
    return v;
}

} // namespace

int main(int argc, char** argv) {
    std::string artifact = argc > 1 ? argv[1] : "splitting_findings.txt";
    std::vector<std::pair<GroundProgram, std::vector<Interpretation>>> golden_sets;
    std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"golden corpus", [&] { return criterion1(golden_sets); }},
        {"reduct-level goldens", criterion2},
        {"alog answer sets are slog+ answer sets", criterion3},
        {"rule satisfaction, supportedness, anti-chain", [&] { return criterion4(golden_sets); }},
        {"splitting equivalence", [&] { return criterion5(artifact); }},
        {"oracle equivalence and candidate restriction", criterion6},
        {"bounded analog of the infinite examples", criterion7},
    };
    bool all = true;
    for (std::size_t i = 0; i != criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        all = all && v.pass;
        std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " - " << criteria[i].first
                  << "\n";
        for (const auto& n : v.notes) {
            std::cout << n << "\n";
        }
        std::cout.flush();
    }
    return all ? 0 : 1;
}
