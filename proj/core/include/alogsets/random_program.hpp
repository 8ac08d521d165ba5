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

#include <alogsets/grounder.hpp>

#include <cstdint>
#include <random>

namespace alogsets {

struct RandomProgramOptions {
    std::size_t max_predicates = 4;
    std::size_t max_terms = 3;
    std::size_t max_rules = 6;
    std::size_t max_body = 3;
    bool set_atoms = true;
    bool set_intro = true;
    bool disjunction = true;
    bool classical_negation = true;
    /// Programs whose candidate universe is larger are regenerated.
    std::size_t max_candidates = 14;
    /// Programs whose full universe is larger are regenerated; 0 disables.
    std::size_t max_universe = 0;
};

/// Small program over unary and propositional predicates p, q, r, s and the
/// integers 0..k-1. Set atoms use card and min comparisons and subset
/// relations; set-introduction heads use subset and equality.
Program random_program(std::mt19937_64& rng, const RandomProgramOptions& o = {});

struct RandomInstance {
    Program program;
    GroundProgram ground;
};

/// Draws programs until one satisfies the size limits. Deterministic in `seed`.
RandomInstance random_instance(std::uint64_t seed, const RandomProgramOptions& o = {});

/// A random splitting set: random candidate literals closed under the
/// splitting condition.
Interpretation random_splitting_set(const GroundProgram& g, std::mt19937_64& rng);

} // namespace alogsets
