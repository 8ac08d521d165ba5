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

#include <alogsets/model.hpp>
#include <alogsets/universe.hpp>

#include <memory>
#include <variant>
#include <vector>

namespace alogsets {

// One tuple of a set name together with the ids of cond instantiated at it.
struct SetInstance {
    TupleId tuple;
    std::vector<LitId> cond;
};

// A set name inside a ground rule. Rule variables are already substituted in
// `pattern`; only set variables remain. `instances` lists every tuple over the
// term pool whose condition literals exist in the universe, so the
// instantiation in A is the subset whose `cond` lies in A.
struct GroundSetName {
    SetName pattern;
    std::vector<SetInstance> instances;
    std::vector<LitId> domain; // sorted union of all instance conditions
};

struct GroundAggCmp {
    AggregateFn fn;
    GroundSetName set;
    CmpRel rel;
    std::int64_t bound;
};

struct GroundAggAggCmp {
    AggregateFn left_fn;
    GroundSetName left;
    CmpRel rel;
    AggregateFn right_fn;
    GroundSetName right;
};

struct GroundSetRel {
    GroundSetName left;
    SetRelOp rel;
    GroundSetName right;
};

using GroundSetAtom = std::variant<GroundAggCmp, GroundAggAggCmp, GroundSetRel>;

std::vector<const GroundSetName*> set_names(const GroundSetAtom& atom);

struct PosLit {
    LitId id;
};
struct NafLit {
    LitId id;
};

using GroundBodyElement = std::variant<PosLit, NafLit, GroundSetAtom>;

struct GroundDisjunction {
    std::vector<LitId> literals;
};

struct GroundSetIntro {
    IntroKind kind;
    std::string predicate;
    std::vector<LitId> extension; // every positive p(t) of the universe
    GroundSetName set;
};

using GroundHead = std::variant<GroundDisjunction, GroundSetIntro>;

struct GroundRule {
    GroundHead head;
    std::vector<GroundBodyElement> body;

    bool is_set_intro() const noexcept { return std::holds_alternative<GroundSetIntro>(head); }
    bool has_set_atoms() const noexcept;
};

struct GroundProgram {
    std::shared_ptr<const Universe> universe;
    std::vector<GroundRule> rules;

    const Universe& u() const { return *universe; }
    bool has_set_intro() const noexcept;
    bool has_set_atoms() const noexcept;
};

/// AST view of a ground program, for printing and structural comparison.
Program to_program(const GroundProgram& g);

} // namespace alogsets
