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
#include <alogsets/errors.hpp>
#include <alogsets/evaluator.hpp>

#include <algorithm>

namespace alogsets {

namespace {

std::vector<TupleId> extension_tuples(const GroundSetIntro& intro, const Interpretation& a, const Universe& u) {
    std::vector<TupleId> out;
    for (LitId id : intro.extension) {
        if (a.contains(id)) {
            out.push_back(u.tuple_of(id));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool holds(SetRelOp op, const Instantiation& l, const Instantiation& r) {
    switch (op) {
    case SetRelOp::Subset:
        return l.size() < r.size() && std::includes(r.begin(), r.end(), l.begin(), l.end());
    case SetRelOp::SubsetEq:
        return std::includes(r.begin(), r.end(), l.begin(), l.end());
    case SetRelOp::Equal:
        return l == r;
    }
    return false;
}

TruthValue from_bool(bool b) {
    return b ? TruthValue::True : TruthValue::False;
}

} // namespace

Instantiation instantiate_set_name(const GroundSetName& s, const Interpretation& a) {
    Instantiation out;
    for (const auto& inst : s.instances) {
        if (a.contains_all(inst.cond)) {
            out.push_back(inst.tuple);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::int64_t> eval_aggregate(AggregateFn f, const Instantiation& inst, const Universe& u) {
    if (f == AggregateFn::Card) {
        return static_cast<std::int64_t>(inst.size());
    }
    std::vector<std::int64_t> values;
    values.reserve(inst.size());
    for (TupleId t : inst) {
        const Tuple& tuple = u.tuple(t);
        if (tuple.empty() || !tuple[0].is_integer() || tuple[0].integer_value() < 0) {
            return std::nullopt;
        }
        values.push_back(tuple[0].integer_value());
    }
    switch (f) {
    case AggregateFn::Sum: {
        std::int64_t s = 0;
        for (auto v : values) {
            if (__builtin_add_overflow(s, v, &s)) {
                throw EvalError(EvalErrorKind::Overflow, "sum aggregate overflow");
            }
        }
        return s;
    }
    case AggregateFn::Min:
        if (values.empty()) {
            return std::nullopt;
        }
        return *std::min_element(values.begin(), values.end());
    case AggregateFn::Max:
        if (values.empty()) {
            return std::nullopt;
        }
        return *std::max_element(values.begin(), values.end());
    case AggregateFn::Card:
        break;
    }
    return std::nullopt;
}

TruthValue eval_set_atom(const GroundSetAtom& sa, std::span<const Interpretation> coords, const Universe& u) {
    return std::visit([&](const auto& x) -> TruthValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GroundAggCmp>) {
            auto v = eval_aggregate(x.fn, instantiate_set_name(x.set, coords[0]), u);
            return v ? from_bool(compare(*v, x.rel, x.bound)) : TruthValue::Undefined;
        } else if constexpr (std::is_same_v<T, GroundAggAggCmp>) {
            auto l = eval_aggregate(x.left_fn, instantiate_set_name(x.left, coords[0]), u);
            auto r = eval_aggregate(x.right_fn, instantiate_set_name(x.right, coords[1]), u);
            return l && r ? from_bool(compare(*l, x.rel, *r)) : TruthValue::Undefined;
        } else {
            return from_bool(holds(x.rel, instantiate_set_name(x.left, coords[0]),
                                   instantiate_set_name(x.right, coords[1])));
        }
    }, sa);
}

TruthValue eval_set_atom(const GroundSetAtom& sa, const Interpretation& a, const Universe& u) {
    const Interpretation coords[2] = {a, a};
    return eval_set_atom(sa, std::span<const Interpretation>(coords), u);
}

TruthValue eval_body(std::span<const GroundBodyElement> body, const Interpretation& a, const Universe& u) {
    TruthValue result = TruthValue::True;
    for (const auto& e : body) {
        TruthValue v = std::visit([&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PosLit>) {
                return from_bool(a.contains(x.id));
            } else if constexpr (std::is_same_v<T, NafLit>) {
                return from_bool(!a.contains(x.id));
            } else {
                return eval_set_atom(x, a, u);
            }
        }, e);
        result = conjoin(result, v);
        if (result == TruthValue::False) {
            break;
        }
    }
    return result;
}

bool head_true(const GroundHead& head, const Interpretation& a, const Universe& u) {
    if (const auto* d = std::get_if<GroundDisjunction>(&head)) {
        return std::any_of(d->literals.begin(), d->literals.end(), [&a](LitId id) { return a.contains(id); });
    }
    const auto& intro = std::get<GroundSetIntro>(head);
    Instantiation p = extension_tuples(intro, a, u);
    Instantiation s = instantiate_set_name(intro.set, a);
    switch (intro.kind) {
    case IntroKind::SubsetOf: return holds(SetRelOp::SubsetEq, p, s);
    case IntroKind::SupersetOf: return holds(SetRelOp::SubsetEq, s, p);
    case IntroKind::Equals: return p == s;
    }
    return false;
}

bool rule_satisfied(const GroundRule& r, const Interpretation& a, const Universe& u) {
    return head_true(r.head, a, u) || eval_body(r.body, a, u) != TruthValue::True;
}

} // namespace alogsets
