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

#include <optional>
#include <span>
#include <vector>

namespace alogsets {

/// Tuples {t : cond(t) ⊆ A} of a set name, sorted by tuple id.
using Instantiation = std::vector<TupleId>;

Instantiation instantiate_set_name(const GroundSetName& s, const Interpretation& a);

/// Card counts tuples. Sum, Min and Max read the first coordinate and are
/// undefined when it is not a natural number; Min and Max are undefined on the
/// empty set and Sum is 0 there. Throws EvalError(Overflow) on Sum overflow.
std::optional<std::int64_t> eval_aggregate(AggregateFn f, const Instantiation& inst, const Universe& u);

TruthValue eval_set_atom(const GroundSetAtom& sa, const Interpretation& a, const Universe& u);

/// Evaluates `sa` with its i-th set name instantiated in `coords[i]`.
TruthValue eval_set_atom(const GroundSetAtom& sa, std::span<const Interpretation> coords, const Universe& u);

TruthValue eval_body(std::span<const GroundBodyElement> body, const Interpretation& a, const Universe& u);

bool head_true(const GroundHead& head, const Interpretation& a, const Universe& u);

/// Head true, or body false or undefined.
bool rule_satisfied(const GroundRule& r, const Interpretation& a, const Universe& u);

} // namespace alogsets
