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

#include <alogsets/random_program.hpp>
#include <alogsets/solver.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace alogsets {

/// Every rule of `g` is satisfied by A.
bool audit_rule_satisfaction(const GroundProgram& g, const Interpretation& a);

/// Every literal of A has a supporting rule: a rule with a true body whose
/// only true disjunct is the literal, or a set-introduction head for p with
/// the literal p(t) and the condition of t in A.
bool audit_supportedness(const GroundProgram& g, const Interpretation& a);

/// No answer set is a proper subset of another.
bool audit_antichain(std::span<const Interpretation> answer_sets);

struct AuditFinding {
    std::uint64_t seed = 0;
    std::string program;
    std::string detail;
};

struct AuditReport {
    std::string suite;
    std::size_t programs = 0;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    /// Failures of a property that must hold.
    std::vector<AuditFinding> violations;
    /// Counterexamples to a property that is only conjectured; reported, not failed.
    std::vector<AuditFinding> findings;

    bool ok() const noexcept { return violations.empty(); }
};

struct AuditOptions {
    RandomProgramOptions programs;
    SolveOptions solve;
};

/// Every alog answer set is an slog+ answer set.
AuditReport audit_alog_within_slog(std::uint64_t seed, std::size_t count, const AuditOptions& o = {});

/// Rule satisfaction and supportedness of every answer set under both
/// semantics, and the anti-chain property for programs without
/// set-introduction heads.
AuditReport audit_answer_set_properties(std::uint64_t seed, std::size_t count, const AuditOptions& o = {});

/// Splitting equivalence on random (program, splitting set) pairs. Under
/// slog+ counterexamples go to `findings`.
AuditReport audit_splitting(std::uint64_t seed, std::size_t count, Semantics sem, const AuditOptions& o = {});

/// On set-free programs both semantics agree with the basic answer sets over
/// the whole universe.
AuditReport audit_basic_oracle(std::uint64_t seed, std::size_t count, const AuditOptions& o = {});

/// Searching the candidate universe finds the same answer sets as searching
/// the whole universe.
AuditReport audit_candidate_restriction(std::uint64_t seed, std::size_t count, const AuditOptions& o = {});

/// Runs every suite with `count` programs each.
std::vector<AuditReport> run_all_audits(std::uint64_t seed, std::size_t count, const AuditOptions& o = {});

/// Seed of the i-th program of a suite.
std::uint64_t audit_seed(std::uint64_t base, std::size_t i);

} // namespace alogsets
