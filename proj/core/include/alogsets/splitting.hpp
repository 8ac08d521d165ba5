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

#include <alogsets/solver.hpp>

#include <optional>
#include <string>

namespace alogsets {

enum class Occurrence { No, InHead, InBody, Both };

/// Literals occurring in the head of `r`: disjuncts, or for a
/// set-introduction head every p(t) and every condition instance of its set
/// name. Sorted.
std::vector<LitId> head_literals(const GroundRule& r);
/// Literals occurring in the body of `r`: positive and default-negated
/// literals and every condition instance of its set names. Sorted.
std::vector<LitId> body_literals(const GroundRule& r);

Occurrence occurs_in(LitId l, const GroundRule& r);

/// If a head literal of a rule is in S, every literal of that rule is in S.
bool check_splitting_set(const GroundProgram& g, const Interpretation& s);

struct SplitResult {
    GroundProgram bottom;
    GroundProgram top;
};

/// Bottom: rules all of whose literals lie in S. Throws NotASplittingSet.
SplitResult split(const GroundProgram& g, const Interpretation& s);

/// Facts for the literals of `a` followed by the rules of `p`.
GroundProgram with_facts(const GroundProgram& p, const Interpretation& a);

struct SplittingAudit {
    bool holds = true;
    std::size_t candidates = 0;
    std::optional<std::string> counterexample;
};

/// Checks, for every consistent candidate A over the candidate universe of
/// `g`: A is an answer set of g iff A ∩ S is an answer set of the bottom and
/// A is an answer set of (A ∩ S as facts) ∪ top.
SplittingAudit audit_splitting_theorem(const GroundProgram& g, const Interpretation& s, Semantics sem,
                                       const SolveOptions& o = {});

} // namespace alogsets
