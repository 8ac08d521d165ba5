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
#include "cli.hpp"

#include <alogsets/alogsets.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace alogsets::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
    std::string file;
    std::string int_range;
    std::size_t cap = 20;
    bool json_output = false;
};

struct InputError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::optional<IntRange> parse_range(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw InputError("--int-range expects MIN..MAX, got '" + text + "'");
    }
    IntRange r{std::stoll(m[1].str()), std::stoll(m[2].str())};
    if (r.min > r.max) {
        throw InputError("--int-range is empty: " + text);
    }
    return r;
}

struct Loaded {
    Program program;
    GroundProgram ground;
};

Loaded load(const Common& c) {
    std::string src = read_file(c.file);
    Program p;
    try {
        p = parse_program(src);
    } catch (const ParseError& e) {
        throw InputError(c.file + (e.line() == 0 ? ": " : ":") + e.what());
    }
    DomainConfig d;
    d.int_range = parse_range(c.int_range);
    try {
        GroundProgram g = ground_program(p, d);
        return {std::move(p), std::move(g)};
    } catch (const ParseError& e) {
        throw InputError(c.file + (e.line() == 0 ? ": " : ":") + e.what());
    }
}

SolveOptions solve_options(const Common& c) {
    SolveOptions o;
    o.max_candidate_bits = c.cap;
    return o;
}

std::vector<Semantics> semantics_list(const std::string& mode) {
    if (mode == "alog") {
        return {Semantics::Alog};
    }
    if (mode == "slog+") {
        return {Semantics::SlogPlus};
    }
    return {Semantics::Alog, Semantics::SlogPlus};
}

json literal_array(const Universe& u, const Interpretation& a) {
    json arr = json::array();
    for (LitId id : a.ids()) {
        arr.push_back(to_string(u.literal(id)));
    }
    return arr;
}

json stats(const GroundProgram& g) {
    return json{{"ground_rules", g.rules.size()},
                {"universe_literals", g.u().size()},
                {"candidate_literals", candidate_universe(g).size()}};
}

int cmd_parse(const Common& c, std::ostream& out) {
    Loaded l = load(c);
    if (c.json_output) {
        out << json{{"program", c.file}, {"valid", true}, {"stats", stats(l.ground)}}.dump(2) << '\n';
    } else {
        out << "OK\n";
    }
    return Success;
}

int cmd_solve(const Common& c, const std::string& mode, std::ostream& out) {
    Loaded l = load(c);
    const auto& g = l.ground;
    auto sems = semantics_list(mode);
    json sets = json::object();
    std::ostringstream text;
    for (Semantics s : sems) {
        auto found = solve(g, s, solve_options(c));
        json arr = json::array();
        std::string prefix = sems.size() > 1 ? std::string(to_string(s)) + ": " : "";
        if (found.empty()) {
            text << prefix << "INCONSISTENT\n";
        }
        for (const auto& a : found) {
            arr.push_back(literal_array(g.u(), a));
            text << prefix << format_interpretation(g.u(), a) << '\n';
        }
        sets[to_string(s)] = std::move(arr);
    }
    if (c.json_output) {
        out << json{{"program", c.file}, {"semantics", mode}, {"answer_sets", sets}, {"stats", stats(g)}}.dump(2)
            << '\n';
    } else {
        out << text.str();
    }
    return Success;
}

int cmd_check(const Common& c, const std::string& mode, const std::string& set_text, bool show_reduct,
              std::ostream& out) {
    Loaded l = load(c);
    const auto& g = l.ground;
    std::vector<GroundLiteral> lits;
    try {
        lits = parse_literal_list(set_text);
    } catch (const ParseError& e) {
        throw InputError(std::string("--set:") + e.what());
    }
    Interpretation a(g.u().size());
    for (const auto& lit : lits) {
        auto id = g.u().find(lit);
        if (!id) {
            throw InputError("--set: literal " + to_string(lit) + " is not in the universe of " + c.file);
        }
        a.insert(*id);
    }
    auto sems = semantics_list(mode);
    json verdicts = json::object();
    std::ostringstream text;
    SolveOptions opts = solve_options(c);
    for (Semantics s : sems) {
        std::string prefix = sems.size() > 1 ? std::string(to_string(s)) + ": " : "";
        bool ok = false;
        std::size_t tried = 0;
        bool enumerated = true;
        std::optional<BasicProgram> reduct;
        if (s == Semantics::Alog) {
            BasicProgram r = alog_reduct(g, a);
            ok = is_answer_set_basic(a, r, opts.slog.basic) && is_consistent(a, g.u());
            tried = 1;
            reduct = std::move(r);
        } else {
            SlogCheck chk = check_slogp(g, a, opts.slog);
            ok = chk.answer_set;
            tried = chk.tried;
            enumerated = chk.enumerated;
            if (!enumerated) {
                tried = chk.total;
            }
            reduct = std::move(chk.witness);
        }
        std::string noun = tried == 1 ? " reduct" : " reducts";
        noun += enumerated ? " tried)" : ", excluded without enumeration)";
        text << prefix << (ok ? "ANSWER SET" : "NOT AN ANSWER SET (" + std::to_string(tried) + noun) << '\n';
        json v{{"answer_set", ok}, {"reducts_tried", enumerated ? tried : 0}};
        if (!enumerated) {
            v["reducts_total"] = tried;
        }
        if (show_reduct) {
            if (reduct) {
                std::string printed = format_basic(*reduct);
                text << printed;
                v["reduct"] = printed;
            } else {
                text << "% no witnessing reduct\n";
                v["reduct"] = nullptr;
            }
        }
        verdicts[to_string(s)] = std::move(v);
    }
    if (c.json_output) {
        out << json{{"program", c.file},
                    {"semantics", mode},
                    {"set", literal_array(g.u(), a)},
                    {"verdicts", verdicts},
                    {"stats", stats(g)}}
                   .dump(2)
            << '\n';
    } else {
        out << text.str();
    }
    return Success;
}

int cmd_diff(const Common& c, std::ostream& out) {
    Loaded l = load(c);
    const auto& g = l.ground;
    auto alog = solve(g, Semantics::Alog, solve_options(c));
    auto slog = solve(g, Semantics::SlogPlus, solve_options(c));
    auto only = [](const std::vector<Interpretation>& x, const std::vector<Interpretation>& y) {
        std::vector<Interpretation> r;
        for (const auto& a : x) {
            if (std::find(y.begin(), y.end(), a) == y.end()) {
                r.push_back(a);
            }
        }
        return r;
    };
    auto a_only = only(alog, slog);
    auto s_only = only(slog, alog);
    if (c.json_output) {
        json sets = json::object();
        json arr = json::array();
        for (const auto& a : a_only) {
            arr.push_back(literal_array(g.u(), a));
        }
        sets["alog_only"] = arr;
        arr = json::array();
        for (const auto& a : s_only) {
            arr.push_back(literal_array(g.u(), a));
        }
        sets["slog+_only"] = arr;
        out << json{{"program", c.file}, {"semantics", "both"}, {"answer_sets", sets}, {"stats", stats(g)}}.dump(2)
            << '\n';
        return Success;
    }
    for (const auto& a : a_only) {
        out << "alog only: " << format_interpretation(g.u(), a) << '\n';
    }
    for (const auto& a : s_only) {
        out << "slog+ only: " << format_interpretation(g.u(), a) << '\n';
    }
    if (a_only.empty() && s_only.empty()) {
        out << "NO DIFFERENCE\n";
    }
    return Success;
}

int cmd_audit(std::uint64_t seed, std::size_t count, bool json_output, std::ostream& out) {
    auto reports = run_all_audits(seed, count);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        auto findings = [](const std::vector<AuditFinding>& fs) {
            json a = json::array();
            for (const auto& f : fs) {
                a.push_back(json{{"seed", f.seed}, {"program", f.program}, {"detail", f.detail}});
            }
            return a;
        };
        arr.push_back(json{{"suite", r.suite},
                           {"ok", r.ok()},
                           {"programs", r.programs},
                           {"checks", r.checks},
                           {"skipped", r.skipped},
                           {"violations", findings(r.violations)},
                           {"findings", findings(r.findings)}});
        if (json_output) {
            continue;
        }
        out << (r.ok() ? "PASS " : "FAIL ") << r.suite << " (" << r.programs << " programs, " << r.checks
            << " checks";
        if (r.skipped != 0) {
            out << ", " << r.skipped << " skipped";
        }
        out << ")\n";
        for (const auto& f : r.violations) {
            out << "  VIOLATION seed " << f.seed << ": " << f.detail << "\n" << f.program;
        }
        for (const auto& f : r.findings) {
            out << "  FINDING seed " << f.seed << ": " << f.detail << "\n" << f.program;
        }
    }
    if (json_output) {
        out << json{{"seed", seed}, {"count", count}, {"ok", ok}, {"suites", arr}}.dump(2) << '\n';
    }
    return ok ? Success : AuditFailure;
}

void add_common(CLI::App* cmd, Common& c, bool needs_file = true) {
    if (needs_file) {
        cmd->add_option("FILE", c.file, "program file")->required();
    }
    cmd->add_option("--int-range", c.int_range, "integer range MIN..MAX, overrides #int");
    cmd->add_option("--cap", c.cap, "largest candidate literal count searched")->check(CLI::Range(0, 62));
    cmd->add_flag("--json", c.json_output, "emit one JSON document");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Answer sets of logic programs with set constructs under two vicious-circle readings"};
    app.name("alogsets");
    app.require_subcommand(1);

    Common c;
    std::string mode = "alog";
    std::string set_text;
    bool show_reduct = false;
    std::uint64_t seed = 1;
    std::size_t count = 100;

    auto* parse_cmd = app.add_subcommand("parse", "validate a program");
    add_common(parse_cmd, c);

    auto* solve_cmd = app.add_subcommand("solve", "print every answer set");
    add_common(solve_cmd, c);
    solve_cmd->add_option("--semantics", mode, "alog, slog+ or both")
        ->check(CLI::IsMember({"alog", "slog+", "both"}));

    auto* check_cmd = app.add_subcommand("check", "decide whether a literal set is an answer set");
    add_common(check_cmd, c);
    check_cmd->add_option("--set", set_text, "comma-separated ground literals")->required();
    check_cmd->add_option("--semantics", mode, "alog, slog+ or both")
        ->check(CLI::IsMember({"alog", "slog+", "both"}))
        ->default_str("both");
    check_cmd->add_flag("--show-reduct", show_reduct, "print the set reduct or the witnessing weak set reduct");

    auto* diff_cmd = app.add_subcommand("diff", "print answer sets found by only one semantics");
    add_common(diff_cmd, c);

    auto* audit_cmd = app.add_subcommand("audit", "run the randomized property suites");
    audit_cmd->add_option("--seed", seed, "generator seed");
    audit_cmd->add_option("--count", count, "programs per suite");
    audit_cmd->add_flag("--json", c.json_output, "emit one JSON document");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    bool mode_given = false;
    try {
        app.parse(reversed);
        mode_given = check_cmd->count("--semantics") > 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    try {
        if (parse_cmd->parsed()) {
            return cmd_parse(c, out);
        }
        if (solve_cmd->parsed()) {
            return cmd_solve(c, mode, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(c, mode_given ? mode : "both", set_text, show_reduct, out);
        }
        if (diff_cmd->parsed()) {
            return cmd_diff(c, out);
        }
        if (audit_cmd->parsed()) {
            return cmd_audit(seed, count, c.json_output, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const CapExceeded& e) {
        err << "error: " << (c.file.empty() ? "" : c.file + ": ") << "cap exceeded: " << e.what() << '\n';
        return CapError;
    } catch (const EvalError& e) {
        err << "error: " << (c.file.empty() ? "" : c.file + ": ") << e.what() << '\n';
        return UsageError;
    } catch (const std::exception& e) {
        err << "error: " << (c.file.empty() ? "" : c.file + ": ") << e.what() << '\n';
        return UsageError;
    }
    return UsageError;
}

} // namespace alogsets::cli
