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
#include <alogsets/splitting.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace alogsets {

namespace {

void add_set_name(const GroundSetName& s, std::set<LitId>& out) {
    out.insert(s.domain.begin(), s.domain.end());
}

bool all_in(const std::vector<LitId>& ids, const Interpretation& s) {
    return std::all_of(ids.begin(), ids.end(), [&s](LitId id) { return s.contains(id); });
}

bool any_in(const std::vector<LitId>& ids, const Interpretation& s) {
    return std::any_of(ids.begin(), ids.end(), [&s](LitId id) { return s.contains(id); });
}

} // namespace

std::vector<LitId> head_literals(const GroundRule& r) {
    std::set<LitId> out;
    if (const auto* d = std::get_if<GroundDisjunction>(&r.head)) {
        out.insert(d->literals.begin(), d->literals.end());
    } else {
        const auto& intro = std::get<GroundSetIntro>(r.head);
        out.insert(intro.extension.begin(), intro.extension.end());
        add_set_name(intro.set, out);
    }
    return {out.begin(), out.end()};
}

std::vector<LitId> body_literals(const GroundRule& r) {
    std::set<LitId> out;
    for (const auto& e : r.body) {
        if (const auto* pl = std::get_if<PosLit>(&e)) {
            out.insert(pl->id);
        } else if (const auto* nl = std::get_if<NafLit>(&e)) {
            out.insert(nl->id);
        } else {
            for (const GroundSetName* s : set_names(std::get<GroundSetAtom>(e))) {
                add_set_name(*s, out);
            }
        }
    }
    return {out.begin(), out.end()};
}

Occurrence occurs_in(LitId l, const GroundRule& r) {
    auto h = head_literals(r);
    auto b = body_literals(r);
    bool in_head = std::binary_search(h.begin(), h.end(), l);
    bool in_body = std::binary_search(b.begin(), b.end(), l);
    if (in_head && in_body) {
        return Occurrence::Both;
    }
    if (in_head) {
        return Occurrence::InHead;
    }
    return in_body ? Occurrence::InBody : Occurrence::No;
}

bool check_splitting_set(const GroundProgram& g, const Interpretation& s) {
    for (const auto& r : g.rules) {
        auto h = head_literals(r);
        if (any_in(h, s) && !(all_in(h, s) && all_in(body_literals(r), s))) {
            return false;
        }
    }
    return true;
}

SplitResult split(const GroundProgram& g, const Interpretation& s) {
    if (!check_splitting_set(g, s)) {
        throw NotASplittingSet("the literal set is not a splitting set of the program");
    }
    SplitResult out{{g.universe, {}}, {g.universe, {}}};
    for (const auto& r : g.rules) {
        bool bottom = all_in(head_literals(r), s) && all_in(body_literals(r), s);
        (bottom ? out.bottom : out.top).rules.push_back(r);
    }
    return out;
}

GroundProgram with_facts(const GroundProgram& p, const Interpretation& a) {
    GroundProgram out{p.universe, {}};
    for (LitId id : a.ids()) {
        out.rules.push_back(GroundRule{GroundDisjunction{{id}}, {}});
    }
    out.rules.insert(out.rules.end(), p.rules.begin(), p.rules.end());
    return out;
}

SplittingAudit audit_splitting_theorem(const GroundProgram& g, const Interpretation& s, Semantics sem,
                                       const SolveOptions& o) {
    SplitResult parts = split(g, s);
    auto domain = candidate_universe(g);
    if (domain.size() > o.max_candidate_bits) {
        throw CapExceeded(CapKind::UniverseTooLarge, "candidate literal count", o.max_candidate_bits, domain.size());
    }
    const Universe& u = g.u();
    SplittingAudit audit;
    const std::uint64_t n = std::uint64_t{1} << domain.size();
    for (std::uint64_t mask = 0; mask != n; ++mask) {
        Interpretation a(u.size());
        for (std::size_t i = 0; i != domain.size(); ++i) {
            if ((mask >> i) & 1u) {
                a.insert(domain[i]);
            }
        }
        if (!is_consistent(a, u)) {
            continue;
        }
        ++audit.candidates;
        Interpretation low = a.intersect(s);
        bool whole = is_answer_set(g, a, sem, o);
        bool parts_hold = is_answer_set(parts.bottom, low, sem, o) &&
                          is_answer_set(with_facts(parts.top, low), a, sem, o);
        if (whole != parts_hold) {
            std::ostringstream msg;
            msg << "A = " << format_interpretation(u, a) << " is " << (whole ? "" : "not ")
                << "an answer set of the program but the split "
                << (parts_hold ? "accepts" : "rejects") << " it; S = " << format_interpretation(u, s);
            audit.holds = false;
            audit.counterexample = msg.str();
            return audit;
        }
    }
    return audit;
}

} // namespace alogsets
