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

#include <alogsets/base_asp.hpp>

namespace alogsets {

/// Set-introduction rules with a false head become constraints; with a true
/// head they become one rule p(t) :- body for each p(t) in A.
GroundProgram set_intro_reduct(const GroundProgram& p, const Interpretation& a);

/// Drops rules with a set atom that is false or undefined in A and replaces
/// each remaining set atom by the cond literals of its names satisfied in A.
/// Throws std::invalid_argument on set-introduction heads.
BasicProgram set_reduct(const GroundProgram& p, const Interpretation& a);

/// set_reduct(set_intro_reduct(p, A), A), the program whose basic answer
/// sets decide membership.
BasicProgram alog_reduct(const GroundProgram& p, const Interpretation& a);

bool is_alog_answer_set(const GroundProgram& p, const Interpretation& a, const BasicOptions& o = {});

} // namespace alogsets
