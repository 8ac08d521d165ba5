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

#include <alogsets/alogsets.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

inline std::string data_path(const std::string& name) {
    return std::string(ALOGSETS_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
    std::ifstream in(data_path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline alogsets::GroundProgram ground(const std::string& src, const alogsets::DomainConfig& d = {}) {
    return alogsets::ground_program(alogsets::parse_program(src), d);
}

inline alogsets::GroundProgram ground_file(const std::string& name, const alogsets::DomainConfig& d = {}) {
    return ground(read_data(name), d);
}

inline alogsets::Interpretation interp(const alogsets::GroundProgram& g, const std::string& lits) {
    auto parsed = lits.empty() ? std::vector<alogsets::GroundLiteral>{} : alogsets::parse_literal_list(lits);
    return alogsets::make_interpretation(g.u(), parsed);
}

inline std::vector<std::string> formatted(const alogsets::GroundProgram& g,
                                          const std::vector<alogsets::Interpretation>& sets) {
    std::vector<std::string> out;
    for (const auto& a : sets) {
        out.push_back(alogsets::format_interpretation(g.u(), a));
    }
    return out;
}

inline std::vector<std::string> solve_text(const alogsets::GroundProgram& g, alogsets::Semantics s) {
    return formatted(g, alogsets::solve(g, s));
}

/// Collapses runs of whitespace so printed programs compare modulo layout.
inline std::string squash(const std::string& text) {
    std::string out;
    bool space = false;
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
            space = !out.empty();
            continue;
        }
        if (space) {
            out += ' ';
            space = false;
        }
        out += c;
    }
    return out;
}

} // namespace testing
