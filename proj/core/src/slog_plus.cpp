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
#include <alogsets/errors.hpp>
#include <alogsets/evaluator.hpp>
#include <alogsets/slog_plus.hpp>

#include <algorithm>

namespace alogsets {

namespace {

std::vector<Interpretation> coordinate_sets(const SupportVector& w, std::size_t universe_size) {
    std::vector<Interpretation> out;
    for (const auto& c : w.coords) {
        out.emplace_back(universe_size, c);
    }
    return out;
}

std::vector<LitId> support_union(const SupportVector& w) {
    std::vector<LitId> out;
    for (const auto& c : w.coords) {
        for (LitId id : c) {
            if (std::find(out.begin(), out.end(), id) == out.end()) {
                out.push_back(id);
            }
        }
    }
    return out;
}

} // namespace

bool satisfied_by_vector(const GroundSetAtom& sa, const SupportVector& w, const Universe& u) {
    auto coords = coordinate_sets(w, u.size());
    return eval_set_atom(sa, coords, u) == TruthValue::True;
}

std::vector<SupportVector> minimal_supports(const GroundSetAtom& sa, const Interpretation& a, const Universe& u,
                                            std::size_t max_bits) {
    std::vector<std::vector<LitId>> dom;
    std::vector<std::pair<std::size_t, LitId>> bits;
    for (const GroundSetName* s : set_names(sa)) {
        std::vector<LitId> d;
        for (LitId id : s->domain) {
            if (a.contains(id)) {
                d.push_back(id);
                bits.emplace_back(dom.size(), id);
            }
        }
        dom.push_back(std::move(d));
    }
    const std::size_t n = bits.size();
    if (n > max_bits) {
        throw CapExceeded(CapKind::UniverseTooLarge, "minimal support search bits", max_bits, n);
    }
    const std::size_t masks = std::size_t{1} << n;
    std::vector<char> good(masks, 0);
    std::vector<Interpretation> coords(dom.size(), Interpretation(u.size()));
    for (std::size_t m = masks; m-- > 0;) {
        bool upward = true;
        for (std::size_t j = 0; upward && j != n; ++j) {
            if (!((m >> j) & 1u)) {
                upward = good[m | (std::size_t{1} << j)] != 0;
            }
        }
        if (!upward) {
            continue;
        }
        for (auto& c : coords) {
            c = Interpretation(u.size());
        }
        for (std::size_t j = 0; j != n; ++j) {
            if ((m >> j) & 1u) {
                coords[bits[j].first].insert(bits[j].second);
            }
        }
        good[m] = eval_set_atom(sa, coords, u) == TruthValue::True ? 1 : 0;
    }
    std::vector<SupportVector> out;
    for (std::size_t m = 0; m != masks; ++m) {
        if (!good[m]) {
            continue;
        }
        bool minimal = true;
        for (std::size_t j = 0; minimal && j != n; ++j) {
            if ((m >> j) & 1u) {
                minimal = good[m ^ (std::size_t{1} << j)] == 0;
            }
        }
        if (!minimal) {
            continue;
        }
        SupportVector w;
        w.coords.resize(dom.size());
        for (std::size_t j = 0; j != n; ++j) {
            if ((m >> j) & 1u) {
                w.coords[bits[j].first].push_back(bits[j].second);
            }
        }
        out.push_back(std::move(w));
    }
    auto weight = [](const SupportVector& w) {
        std::size_t k = 0;
        for (const auto& c : w.coords) {
            k += c.size();
        }
        return k;
    };
    std::sort(out.begin(), out.end(), [&weight](const SupportVector& x, const SupportVector& y) {
        auto wx = weight(x);
        auto wy = weight(y);
        return wx != wy ? wx < wy : x < y;
    });
    return out;
}

WeakReducts::WeakReducts(const GroundProgram& p, const Interpretation& a, const SlogOptions& o)
    : universe_(p.universe), cap_(o.max_reducts) {
    for (const auto& r : p.rules) {
        const auto* head = std::get_if<GroundDisjunction>(&r.head);
        if (head == nullptr) {
            throw std::invalid_argument("weak set reducts need a program without set-introduction heads");
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
        Template t{head->literals, {}};
        for (const auto& e : r.body) {
            if (const auto* pl = std::get_if<PosLit>(&e)) {
                t.body.push_back({BodyLit{pl->id, false}, 0});
            } else if (const auto* nl = std::get_if<NafLit>(&e)) {
                t.body.push_back({BodyLit{nl->id, true}, 0});
            } else {
                auto supports = minimal_supports(std::get<GroundSetAtom>(e), a, p.u(), o.max_support_bits);
                std::vector<std::vector<LitId>> unions;
                for (const auto& w : supports) {
                    unions.push_back(support_union(w));
                }
                if (unions.empty()) {
                    throw std::logic_error("true set atom without a minimal support");
                }
                total_ = total_ > SIZE_MAX / unions.size() ? SIZE_MAX : total_ * unions.size();
                t.body.push_back({std::nullopt, choices_.size()});
                choices_.push_back(std::move(unions));
            }
        }
        rules_.push_back(std::move(t));
    }
    counter_.assign(choices_.size(), 0);
}

BasicProgram WeakReducts::assemble(const std::vector<std::size_t>& choice) const {
    BasicProgram out{universe_, {}};
    for (const auto& t : rules_) {
        BasicRule br{t.head, {}};
        auto add = [&br](BodyLit b) {
            if (std::find(br.body.begin(), br.body.end(), b) == br.body.end()) {
                br.body.push_back(b);
            }
        };
        for (const auto& piece : t.body) {
            if (piece.lit) {
                add(*piece.lit);
            } else {
                for (LitId id : choices_[piece.slot][choice[piece.slot]]) {
                    add({id, false});
                }
            }
        }
        out.rules.push_back(std::move(br));
    }
    return out;
}

std::optional<BasicProgram> WeakReducts::next() {
    if (done_) {
        return std::nullopt;
    }
    if (produced_ == cap_) {
        throw CapExceeded(CapKind::UniverseTooLarge, "weak set reduct combinations", cap_, total_);
    }
    BasicProgram out = assemble(counter_);
    ++produced_;
    std::size_t k = counter_.size();
    while (k > 0) {
        if (++counter_[k - 1] < choices_[k - 1].size()) {
            break;
        }
        counter_[k - 1] = 0;
        --k;
    }
    done_ = k == 0;
    return out;
}

std::optional<bool> WeakReducts::decide(const Interpretation& a, std::optional<BasicProgram>* witness) const {
    // Every support lies inside A, so whether a rule of the GL reduct applies
    // to A does not depend on the chosen supports.
    auto blocked = [&a](const Template& t) {
        return std::any_of(t.body.begin(), t.body.end(),
                           [&a](const Piece& p) { return p.lit && p.lit->naf && a.contains(p.lit->id); });
    };
    auto fixed_in = [](const Template& t, const Interpretation& s) {
        return std::all_of(t.body.begin(), t.body.end(),
                           [&s](const Piece& p) { return !p.lit || p.lit->naf || s.contains(p.lit->id); });
    };
    bool normal = true;
    for (const auto& t : rules_) {
        std::vector<LitId> h = t.head;
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
        normal = normal && h.size() <= 1;
        if (blocked(t) || !fixed_in(t, a)) {
            continue;
        }
        if (std::none_of(h.begin(), h.end(), [&a](LitId id) { return a.contains(id); })) {
            return false;
        }
    }
    if (!normal) {
        return std::nullopt;
    }
    // Least model of the reduct that keeps every support alternative. The
    // alternative each rule first fires with is a single weak reduct with
    // the same least model, and no other choice derives more.
    std::vector<std::size_t> choice(choices_.size(), 0);
    std::vector<char> fired(rules_.size(), 0);
    Interpretation least(a.universe_size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i != rules_.size(); ++i) {
            const Template& t = rules_[i];
            if (fired[i] || t.head.empty() || blocked(t) || !fixed_in(t, least)) {
                continue;
            }
            std::vector<std::pair<std::size_t, std::size_t>> picks;
            bool ok = true;
            for (const auto& piece : t.body) {
                if (piece.lit) {
                    continue;
                }
                const auto& alts = choices_[piece.slot];
                auto it = std::find_if(alts.begin(), alts.end(),
                                       [&least](const std::vector<LitId>& alt) { return least.contains_all(alt); });
                if (it == alts.end()) {
                    ok = false;
                    break;
                }
                picks.emplace_back(piece.slot, static_cast<std::size_t>(it - alts.begin()));
            }
            if (!ok) {
                continue;
            }
            for (auto [slot, k] : picks) {
                choice[slot] = k;
            }
            fired[i] = 1;
            least.insert(t.head.front());
            changed = true;
        }
    }
    bool answer = least == a;
    if (answer && witness != nullptr) {
        *witness = assemble(choice);
    }
    return answer;
}

std::vector<BasicProgram> weak_set_reducts(const GroundProgram& p, const Interpretation& a, const SlogOptions& o) {
    WeakReducts gen(p, a, o);
    std::vector<BasicProgram> out;
    while (auto r = gen.next()) {
        out.push_back(std::move(*r));
    }
    return out;
}

SlogCheck check_slogp(const GroundProgram& p, const Interpretation& a, const SlogOptions& o) {
    SlogCheck result;
    if (!is_consistent(a, p.u())) {
        return result;
    }
    WeakReducts gen(set_intro_reduct(p, a), a, o);
    result.total = gen.total();
    if (gen.total() > o.max_reducts) {
        if (auto verdict = gen.decide(a, &result.witness)) {
            result.answer_set = *verdict;
            result.enumerated = false;
            return result;
        }
    }
    while (auto r = gen.next()) {
        ++result.tried;
        if (is_answer_set_basic(a, *r, o.basic)) {
            result.answer_set = true;
            result.witness = std::move(r);
            break;
        }
    }
    return result;
}

bool is_slogp_answer_set(const GroundProgram& p, const Interpretation& a, const SlogOptions& o) {
    if (!is_consistent(a, p.u())) {
        return false;
    }
    WeakReducts gen(set_intro_reduct(p, a), a, o);
    if (auto verdict = gen.decide(a, nullptr)) {
        return *verdict;
    }
    while (auto r = gen.next()) {
        if (is_answer_set_basic(a, *r, o.basic)) {
            return true;
        }
    }
    return false;
}

} // namespace alogsets
