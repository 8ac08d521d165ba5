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

#include <memory>
#include <span>
#include <vector>

namespace alogsets {

struct BodyLit {
    LitId id;
    bool naf = false;
    friend bool operator==(const BodyLit&, const BodyLit&) = default;
};

// Ground disjunctive rule without set atoms. An empty head is a constraint.
struct BasicRule {
    std::vector<LitId> head;
    std::vector<BodyLit> body;
    friend bool operator==(const BasicRule&, const BasicRule&) = default;
};

struct BasicProgram {
    std::shared_ptr<const Universe> universe;
    std::vector<BasicRule> rules;
};

/// Throws std::invalid_argument if `g` has set atoms or set-introduction heads.
BasicProgram to_basic(const GroundProgram& g);
Program to_program(const BasicProgram& p);
std::string format_basic(const BasicProgram& p);

BasicProgram gl_reduct(const BasicProgram& p, const Interpretation& a);

struct BasicOptions {
    /// Largest |A| for the subset search used when reduct heads are disjunctive.
    std::size_t max_minimality_bits = 24;
};

/// Consistent, closed under the reduct and minimal among closed sets.
/// Throws CapExceeded(UniverseTooLarge) when minimality needs a search
/// beyond the configured size.
bool is_answer_set_basic(const Interpretation& a, const BasicProgram& p, const BasicOptions& o = {});

/// Every answer set whose literals lie in `domain`, sorted. Throws
/// CapExceeded(UniverseTooLarge) when |domain| exceeds `max_bits`.
std::vector<Interpretation> answer_sets_basic(const BasicProgram& p, std::span<const LitId> domain,
                                              std::size_t max_bits = 20);
/// Same over the whole universe.
std::vector<Interpretation> answer_sets_basic(const BasicProgram& p, std::size_t max_bits = 20);

/// Least set closed under the naf-free non-disjunctive rules of `p`,
/// ignoring constraints and rules whose head has more than one literal.
Interpretation least_fixpoint(const BasicProgram& p);

} // namespace alogsets
