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
#include <alogsets/random_program.hpp>
#include <alogsets/solver.hpp>
#include <alogsets/splitting.hpp>

#include <algorithm>

namespace alogsets {

namespace {

class Draw {
public:
    explicit Draw(std::mt19937_64& rng) : rng_(rng) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
    template <class T> const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

private:
    std::mt19937_64& rng_;
};

struct Pred {
    std::string name;
    std::size_t arity;
};

} // namespace

Program random_program(std::mt19937_64& rng, const RandomProgramOptions& o) {
    Draw d(rng);
    static const std::vector<std::string> names = {"p", "q", "r", "s"};
    const std::size_t npred = 1 + d.below(std::min(o.max_predicates, names.size()));
    const std::size_t nterms = 1 + d.below(o.max_terms);
    std::vector<Pred> preds;
    std::vector<Pred> unary;
    for (std::size_t i = 0; i != npred; ++i) {
        // At least one unary predicate keeps set names available.
        std::size_t arity = (i == 0 || d.chance(0.6)) ? 1 : 0;
        preds.push_back({names[i], arity});
        if (arity == 1) {
            unary.push_back(preds.back());
        }
    }

    const Term x = Term::variable("X");
    auto term = [&](bool allow_var) {
        if (allow_var && d.chance(0.4)) {
            return x;
        }
        return Term::integer(static_cast<std::int64_t>(d.below(nterms)));
    };
    auto literal = [&](bool allow_var, bool allow_neg) {
        const Pred& p = d.pick(preds);
        Literal l{allow_neg && o.classical_negation && d.chance(0.15), p.name, {}};
        if (p.arity == 1) {
            l.args.push_back(term(allow_var));
        }
        return l;
    };
    auto set_name = [&]() {
        const Pred& p = d.pick(unary);
        return SetName{{"Y"}, {Literal{false, p.name, {Term::variable("Y")}}}, std::nullopt};
    };
    auto uses_x = [](const Literal& l) { return !l.args.empty() && l.args[0].is<Variable>(); };
    static const std::vector<CmpRel> rels = {CmpRel::Gt, CmpRel::Ge, CmpRel::Lt, CmpRel::Le, CmpRel::Eq, CmpRel::Ne};

    Program prog;
    prog.signature.int_range = IntRange{0, static_cast<std::int64_t>(nterms) - 1};
    for (const auto& p : preds) {
        prog.signature.arities.emplace(p.name, p.arity);
    }
    const std::size_t nrules = 1 + d.below(o.max_rules);
    for (std::size_t ri = 0; ri != nrules; ++ri) {
        Rule r;
        bool needs_x = false;
        if (o.set_intro && d.chance(0.15)) {
            const Pred& p = d.pick(unary);
            r.head = SetIntro{d.chance(0.7) ? IntroKind::SubsetOf : IntroKind::Equals, p.name, set_name()};
        } else {
            Disjunction h;
            std::size_t k = d.chance(0.1) ? 0 : (o.disjunction && d.chance(0.2) ? 2 : 1);
            for (std::size_t i = 0; i != k; ++i) {
                h.literals.push_back(literal(true, true));
                needs_x = needs_x || uses_x(h.literals.back());
            }
            r.head = std::move(h);
        }
        const std::size_t nbody = d.below(o.max_body + 1);
        for (std::size_t i = 0; i != nbody; ++i) {
            double roll = std::uniform_real_distribution<double>(0, 1)(rng);
            if (o.set_atoms && roll < 0.35) {
                double kind = std::uniform_real_distribution<double>(0, 1)(rng);
                auto bound = Term::integer(static_cast<std::int64_t>(d.below(3)));
                if (kind < 0.45) {
                    r.body.emplace_back(SetAtom{AggCmp{AggregateFn::Card, set_name(), d.pick(rels), bound}});
                } else if (kind < 0.7) {
                    r.body.emplace_back(SetAtom{AggCmp{AggregateFn::Min, set_name(), d.pick(rels), bound}});
                } else {
                    SetRelOp op = d.chance(0.5) ? SetRelOp::SubsetEq : SetRelOp::Subset;
                    r.body.emplace_back(SetAtom{SetRel{set_name(), op, set_name()}});
                }
            } else if (roll < 0.7) {
                Literal l = literal(true, true);
                needs_x = needs_x || uses_x(l);
                r.body.emplace_back(Pos{std::move(l)});
            } else {
                Literal l = literal(true, true);
                needs_x = needs_x || uses_x(l);
                r.body.emplace_back(Naf{std::move(l)});
            }
        }
        bool bound_x = std::any_of(r.body.begin(), r.body.end(), [&](const BodyElement& e) {
            const auto* p = std::get_if<Pos>(&e);
            return p != nullptr && uses_x(p->lit);
        });
        if (needs_x && !bound_x) {
            r.body.emplace_back(Pos{Literal{false, d.pick(unary).name, {x}}});
        }
        prog.rules.push_back(std::move(r));
    }
    return prog;
}

RandomInstance random_instance(std::uint64_t seed, const RandomProgramOptions& o) {
    std::mt19937_64 rng(seed);
    for (;;) {
        Program p = random_program(rng, o);
        GroundProgram g = ground_program(p);
        if (candidate_universe(g).size() > o.max_candidates) {
            continue;
        }
        if (o.max_universe != 0 && g.u().size() > o.max_universe) {
            continue;
        }
        return {std::move(p), std::move(g)};
    }
}

Interpretation random_splitting_set(const GroundProgram& g, std::mt19937_64& rng) {
    Draw d(rng);
    Interpretation s(g.u().size());
    for (LitId id : candidate_universe(g)) {
        if (d.chance(0.3)) {
            s.insert(id);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            auto h = head_literals(r);
            bool touches = std::any_of(h.begin(), h.end(), [&s](LitId id) { return s.contains(id); });
            if (!touches) {
                continue;
            }
            auto b = body_literals(r);
            for (const auto* ids : {&h, &b}) {
                for (LitId id : *ids) {
                    if (!s.contains(id)) {
                        s.insert(id);
                        changed = true;
                    }
                }
            }
        }
    }
    return s;
}

} // namespace alogsets
