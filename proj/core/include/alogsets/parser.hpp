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

#include <alogsets/errors.hpp>
#include <alogsets/model.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace alogsets {

/// Parses program text (see docs/grammar.md). Throws ParseError.
Program parse_program(std::string_view src);

/// Parses a comma-separated list of ground literals such as "p(1),-q(a)".
/// Throws ParseError on syntax errors or non-ground literals.
std::vector<GroundLiteral> parse_literal_list(std::string_view src);

/// Renders a program in the concrete syntax accepted by parse_program.
std::string pretty_print(const Program& p);
std::string format_rule(const Rule& r);
std::string format_set_atom(const SetAtom& a);
std::string format_set_name(const SetName& s);

} // namespace alogsets
