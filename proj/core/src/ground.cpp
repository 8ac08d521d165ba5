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
#include <alogsets/ground.hpp>

namespace alogsets {

std::vector<const GroundSetName*> set_names(const GroundSetAtom& atom) {
    return std::visit([](const auto& a) -> std::vector<const GroundSetName*> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, GroundAggCmp>) {
            return {&a.set};
        } else {
            return {&a.left, &a.right};
        }
    }, atom);
}

bool GroundRule::has_set_atoms() const noexcept {
    for (const auto& e : body) {
        if (std::holds_alternative<GroundSetAtom>(e)) {
            return true;
        }
    }
    return false;
}

bool GroundProgram::has_set_intro() const noexcept {
    for (const auto& r : rules) {
        if (r.is_set_intro()) {
            return true;
        }
    }
    return false;
}

bool GroundProgram::has_set_atoms() const noexcept {
    for (const auto& r : rules) {
        if (r.has_set_atoms()) {
            return true;
        }
    }
    return false;
}

Program to_program(const GroundProgram& g) {
    Program p;
    p.signature.arities = g.u().arities();
    auto lit = [&g](LitId id) { return g.u().literal(id).literal(); };
    for (const auto& r : g.rules) {
        Rule out;
        if (const auto* d = std::get_if<GroundDisjunction>(&r.head)) {
            Disjunction h;
            for (LitId id : d->literals) {
                h.literals.push_back(lit(id));
            }
            out.head = std::move(h);
        } else {
            const auto& intro = std::get<GroundSetIntro>(r.head);
            out.head = SetIntro{intro.kind, intro.predicate, intro.set.pattern};
        }
        for (const auto& e : r.body) {
            if (const auto* pl = std::get_if<PosLit>(&e)) {
                out.body.emplace_back(Pos{lit(pl->id)});
            } else if (const auto* nl = std::get_if<NafLit>(&e)) {
                out.body.emplace_back(Naf{lit(nl->id)});
            } else {
                const auto& sa = std::get<GroundSetAtom>(e);
                SetAtom a = std::visit([](const auto& x) -> SetAtom {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, GroundAggCmp>) {
                        return AggCmp{x.fn, x.set.pattern, x.rel, Term::integer(x.bound)};
                    } else if constexpr (std::is_same_v<T, GroundAggAggCmp>) {
                        return AggAggCmp{x.left_fn, x.left.pattern, x.rel, x.right_fn, x.right.pattern};
                    } else {
                        return SetRel{x.left.pattern, x.rel, x.right.pattern};
                    }
                }, sa);
                out.body.emplace_back(std::move(a));
            }
        }
        p.rules.push_back(std::move(out));
    }
    return p;
}

} // namespace alogsets
