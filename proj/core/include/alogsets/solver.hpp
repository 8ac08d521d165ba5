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

#include <alogsets/alog.hpp>
#include <alogsets/slog_plus.hpp>

#include <span>
#include <vector>

namespace alogsets {

enum class Semantics { Alog, SlogPlus };
enum class SemanticsMode { Alog, SlogPlus, Both };

const char* to_string(Semantics s);

struct SolveOptions {
    /// Largest candidate literal count searched by brute force.
    std::size_t max_candidate_bits = 20;
    SlogOptions slog;
};

/// Literals of disjunctive heads plus p(t) for every set-introduction
/// predicate p, sorted. Supportedness makes this a sound search space.
std::vector<LitId> candidate_universe(const GroundProgram& g);

bool is_answer_set(const GroundProgram& g, const Interpretation& a, Semantics s, const SolveOptions& o = {});

/// All answer sets within the candidate universe, sorted. Throws
/// CapExceeded(UniverseTooLarge) past `max_candidate_bits`.
std::vector<Interpretation> solve(const GroundProgram& g, Semantics s, const SolveOptions& o = {});

/// All answer sets whose literals lie in `domain`, sorted.
std::vector<Interpretation> solve_over(const GroundProgram& g, std::span<const LitId> domain, Semantics s,
                                       const SolveOptions& o = {});

} // namespace alogsets
