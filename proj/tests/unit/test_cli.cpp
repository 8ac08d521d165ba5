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

#include <cli.hpp>

#include <json.hpp>

#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = alogsets::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) {
    return testing::data_path(name);
}

} // namespace

TEST_CASE("parse") {
    auto r = run({"parse", data("p3.alog")});
    CHECK(r.code == 0);
    CHECK(r.out == "OK\n");
}

TEST_CASE("solve prints each answer set or INCONSISTENT") {
    CHECK(run({"solve", data("p2.alog"), "--semantics", "both"}).out == "alog: INCONSISTENT\nslog+: {p(1)}\n");
    CHECK(run({"solve", data("empty.alog")}).out == "{}\n");
    CHECK(run({"solve", data("p9.alog")}).out == "{q(a)}\n{p(a), q(a)}\n");
}

TEST_CASE("check verdicts and reducts") {
    auto r = run({"check", data("p3.alog"), "--set", "p(1),p(2),p(3)", "--semantics", "slog+"});
    CHECK(r.code == 0);
    CHECK(r.out.find("NOT AN ANSWER SET (9 reducts tried)") != std::string::npos);
    auto s = run({"check", data("p4.alog"), "--set", "q(a)", "--semantics", "alog", "--show-reduct"});
    CHECK(testing::squash(s.out).find("p(a) :- q(a). q(a).") != std::string::npos);
    CHECK(s.out.find("NOT AN ANSWER SET") != std::string::npos);
}

TEST_CASE("diff") {
    auto r = run({"diff", data("p2.alog")});
    CHECK(r.out.find("slog+ only:") != std::string::npos);
    CHECK(r.out.find("{p(1)}") != std::string::npos);
    CHECK(run({"diff", data("p9.alog")}).out.find("NO DIFFERENCE") != std::string::npos);
}

TEST_CASE("json output") {
    auto r = run({"solve", data("p9.alog"), "--semantics", "both", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("program"));
    CHECK(j.contains("semantics"));
    CHECK(j["answer_sets"]["alog"].size() == 2);
    CHECK(j["stats"]["candidate_literals"] == 2);
}

TEST_CASE("output is deterministic") {
    auto a = run({"solve", data("graduate.alog"), "--semantics", "both", "--json"});
    auto b = run({"solve", data("graduate.alog"), "--semantics", "both", "--json"});
    CHECK(a.out == b.out);
}

TEST_CASE("error exit codes") {
    auto missing = run({"solve"});
    CHECK(missing.code == 1);
    auto bad = run({"solve", data("no_such_file.alog")});
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
    auto cap = run({"solve", data("graduate.alog"), "--cap", "1"});
    CHECK(cap.code == 2);
    CHECK(cap.err.find("error:") == 0);
    auto range = run({"solve", data("p5.alog"), "--int-range", "3..1"});
    CHECK(range.code == 1);
}

TEST_CASE("parse errors carry file and position") {
    auto path = std::filesystem::temp_directory_path() / "alogsets_bad.alog";
    {
        std::ofstream f(path);
        f << "p(a).\nq(a) :- p(.\n";
    }
    auto r = run({"parse", path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find(path.string() + ":2:") != std::string::npos);
}

TEST_CASE("audit") {
    auto r = run({"audit", "--seed", "5", "--count", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
