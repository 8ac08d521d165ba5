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
#include <alogsets/base_asp.hpp>
#include <alogsets/errors.hpp>
#include <alogsets/parser.hpp>

#include <algorithm>

namespace alogsets {

namespace {

bool body_holds(const BasicRule& r, const Interpretation& a) {
    return std::all_of(r.body.begin(), r.body.end(),
                       [&a](const BodyLit& b) { return a.contains(b.id) != b.naf; });
}

bool closed_under(const std::vector<BasicRule>& rules, const Interpretation& a) {
    for (const auto& r : rules) {
        if (body_holds(r, a) &&
            std::none_of(r.head.begin(), r.head.end(), [&a](LitId id) { return a.contains(id); })) {
            return false;
        }
    }
    return true;
}

Interpretation fixpoint(std::size_t size, const std::vector<BasicRule>& rules) {
    Interpretation m(size);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules) {
            if (r.head.size() == 1 && !m.contains(r.head[0]) && body_holds(r, m)) {
                m.insert(r.head[0]);
                changed = true;
            }
        }
    }
    return m;
}

} // namespace

BasicProgram to_basic(const GroundProgram& g) {
    BasicProgram p{g.universe, {}};
    for (const auto& r : g.rules) {
        const auto* d = std::get_if<GroundDisjunction>(&r.head);
        if (d == nullptr) {
            throw std::invalid_argument("set-introduction head in a basic program");
        }
        BasicRule br{d->literals, {}};
        for (const auto& e : r.body) {
            if (const auto* pl = std::get_if<PosLit>(&e)) {
                br.body.push_back({pl->id, false});
            } else if (const auto* nl = std::get_if<NafLit>(&e)) {
                br.body.push_back({nl->id, true});
            } else {
                throw std::invalid_argument("set atom in a basic program");
            }
        }
        p.rules.push_back(std::move(br));
    }
    return p;
}

Program to_program(const BasicProgram& p) {
    Program out;
    out.signature.arities = p.universe->arities();
    for (const auto& r : p.rules) {
        Rule rule;
        Disjunction h;
        for (LitId id : r.head) {
            h.literals.push_back(p.universe->literal(id).literal());
        }
        rule.head = std::move(h);
        for (const auto& b : r.body) {
            const Literal& l = p.universe->literal(b.id).literal();
            if (b.naf) {
                rule.body.emplace_back(Naf{l});
            } else {
                rule.body.emplace_back(Pos{l});
            }
        }
        out.rules.push_back(std::move(rule));
    }
    return out;
}

std::string format_basic(const BasicProgram& p) {
    return pretty_print(to_program(p));
}

BasicProgram gl_reduct(const BasicProgram& p, const Interpretation& a) {
    BasicProgram out{p.universe, {}};
    for (const auto& r : p.rules) {
        bool blocked = std::any_of(r.body.begin(), r.body.end(),
                                   [&a](const BodyLit& b) { return b.naf && a.contains(b.id); });
        if (blocked) {
            continue;
        }
        BasicRule kept{r.head, {}};
        for (const auto& b : r.body) {
            if (!b.naf) {
                kept.body.push_back(b);
            }
        }
        out.rules.push_back(std::move(kept));
    }
    return out;
}

Interpretation least_fixpoint(const BasicProgram& p) {
    std::vector<BasicRule> positive;
    for (const auto& r : p.rules) {
        bool has_naf = std::any_of(r.body.begin(), r.body.end(), [](const BodyLit& b) { return b.naf; });
        if (!has_naf && r.head.size() == 1) {
            positive.push_back(r);
        }
    }
    return fixpoint(p.universe->size(), positive);
}

bool is_answer_set_basic(const Interpretation& a, const BasicProgram& p, const BasicOptions& o) {
    const Universe& u = *p.universe;
    if (!is_consistent(a, u)) {
        return false;
    }
    BasicProgram reduct = gl_reduct(p, a);
    if (!closed_under(reduct.rules, a)) {
        return false;
    }
    // Any closed B ⊆ A only needs the head literals inside A, and rules whose
    // body leaves A can never fire below A.
    std::vector<BasicRule> relevant;
    bool disjunctive = false;
    for (const auto& r : reduct.rules) {
        if (!body_holds(r, a)) {
            continue;
        }
        BasicRule cut{{}, r.body};
        for (LitId id : r.head) {
            if (a.contains(id)) {
                cut.head.push_back(id);
            }
        }
        disjunctive = disjunctive || cut.head.size() > 1;
        relevant.push_back(std::move(cut));
    }
    if (!disjunctive) {
        return fixpoint(u.size(), relevant) == a;
    }
    std::vector<LitId> ids = a.ids();
    if (ids.size() > o.max_minimality_bits) {
        throw CapExceeded(CapKind::UniverseTooLarge, "minimality check subset search", o.max_minimality_bits,
                          ids.size());
    }
    // Literals derived by definite rules belong to every closed subset.
    Interpretation forced = fixpoint(u.size(), relevant);
    std::vector<LitId> free;
    for (LitId id : ids) {
        if (!forced.contains(id)) {
            free.push_back(id);
        }
    }
    const std::uint64_t n = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask + 1 < n; ++mask) {
        Interpretation b = forced;
        for (std::size_t i = 0; i != free.size(); ++i) {
            if ((mask >> i) & 1u) {
                b.insert(free[i]);
            }
        }
        if (closed_under(relevant, b)) {
            return false;
        }
    }
    return true;
}

std::vector<Interpretation> answer_sets_basic(const BasicProgram& p, std::span<const LitId> domain,
                                              std::size_t max_bits) {
    if (domain.size() > max_bits) {
        throw CapExceeded(CapKind::UniverseTooLarge, "candidate literal count", max_bits, domain.size());
    }
    const Universe& u = *p.universe;
    std::vector<Interpretation> out;
    const std::uint64_t n = std::uint64_t{1} << domain.size();
    for (std::uint64_t mask = 0; mask != n; ++mask) {
        Interpretation a(u.size());
        for (std::size_t i = 0; i != domain.size(); ++i) {
            if ((mask >> i) & 1u) {
                a.insert(domain[i]);
            }
        }
        if (is_consistent(a, u) && is_answer_set_basic(a, p)) {
            out.push_back(std::move(a));
        }
    }
    std::sort(out.begin(), out.end(), answer_set_less);
    return out;
}

std::vector<Interpretation> answer_sets_basic(const BasicProgram& p, std::size_t max_bits) {
    std::vector<LitId> all(p.universe->size());
    for (LitId i = 0; i != all.size(); ++i) {
        all[i] = i;
    }
    return answer_sets_basic(p, all, max_bits);
}

} // namespace alogsets
