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
#include <alogsets/alog.hpp>
#include <alogsets/evaluator.hpp>

#include <algorithm>

namespace alogsets {

GroundProgram set_intro_reduct(const GroundProgram& p, const Interpretation& a) {
    GroundProgram out{p.universe, {}};
    for (const auto& r : p.rules) {
        const auto* intro = std::get_if<GroundSetIntro>(&r.head);
        if (intro == nullptr) {
            out.rules.push_back(r);
            continue;
        }
        if (!head_true(r.head, a, p.u())) {
            out.rules.push_back(GroundRule{GroundDisjunction{}, r.body});
            continue;
        }
        for (LitId id : intro->extension) {
            if (a.contains(id)) {
                out.rules.push_back(GroundRule{GroundDisjunction{{id}}, r.body});
            }
        }
    }
    return out;
}

BasicProgram set_reduct(const GroundProgram& p, const Interpretation& a) {
    BasicProgram out{p.universe, {}};
    for (const auto& r : p.rules) {
        const auto* head = std::get_if<GroundDisjunction>(&r.head);
        if (head == nullptr) {
            throw std::invalid_argument("set reduct applied to a set-introduction rule");
        }
        bool removed = false;
        for (const auto& e : r.body) {
            if (const auto* sa = std::get_if<GroundSetAtom>(&e)) {
                if (eval_set_atom(*sa, a, p.u()) != TruthValue::True) {
                    removed = true;
                    break;
                }
            }
        }
        if (removed) {
            continue;
        }
        BasicRule br{head->literals, {}};
        auto add = [&br](BodyLit b) {
            if (std::find(br.body.begin(), br.body.end(), b) == br.body.end()) {
                br.body.push_back(b);
            }
        };
        for (const auto& e : r.body) {
            if (const auto* pl = std::get_if<PosLit>(&e)) {
                add({pl->id, false});
            } else if (const auto* nl = std::get_if<NafLit>(&e)) {
                add({nl->id, true});
            } else {
                for (const GroundSetName* s : set_names(std::get<GroundSetAtom>(e))) {
                    for (const auto& inst : s->instances) {
                        if (a.contains_all(inst.cond)) {
                            for (LitId id : inst.cond) {
                                add({id, false});
                            }
                        }
                    }
                }
            }
        }
        out.rules.push_back(std::move(br));
    }
    return out;
}

BasicProgram alog_reduct(const GroundProgram& p, const Interpretation& a) {
    return set_reduct(set_intro_reduct(p, a), a);
}

bool is_alog_answer_set(const GroundProgram& p, const Interpretation& a, const BasicOptions& o) {
    return is_answer_set_basic(a, alog_reduct(p, a), o);
}

} // namespace alogsets
