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

#include <alogsets/ground.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alogsets {

// Finite stand-in for the unbounded universes of the language. When no range
// is given here or by `#int(min,max).`, the range spans the smallest and
// largest integer written in the program.
struct DomainConfig {
    std::optional<IntRange> int_range;
    std::vector<std::string> constants;
    std::size_t max_range_size = 10'000;
    std::size_t max_instances = 1'000'000;
    std::size_t max_universe = 200'000;
    std::size_t max_function_depth = 8;
};

using Binding = std::map<std::string, Term>;

/// Naive full instantiation of rule variables followed by universe
/// construction. Throws CapExceeded(DomainTooLarge), ParseError(Scope) for
/// unsafe rules and EvalError(Overflow).
GroundProgram ground_program(const Program& p, const DomainConfig& d = {});

/// Evaluates arithmetic after substituting `binding`. Throws EvalError and
/// std::invalid_argument if a variable stays unbound.
Term eval_arith(const Term& t, const Binding& binding);

/// Every literal of the universe of `g`, in literal order.
std::vector<GroundLiteral> herbrand_atoms(const GroundProgram& g);

/// The integer range grounding uses for `p` under `d`, if any.
std::optional<IntRange> effective_int_range(const Program& p, const DomainConfig& d);

} // namespace alogsets
