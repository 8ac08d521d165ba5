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
#include <alogsets/grounder.hpp>
#include <alogsets/parser.hpp>

#include <algorithm>
#include <set>

namespace alogsets {

namespace {

// Thrown inside one instance to discard it.
struct DropInstance {};

std::int64_t apply(ArithOp op, std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    bool overflow = false;
    switch (op) {
    case ArithOp::Add: overflow = __builtin_add_overflow(a, b, &r); break;
    case ArithOp::Sub: overflow = __builtin_sub_overflow(a, b, &r); break;
    case ArithOp::Mul: overflow = __builtin_mul_overflow(a, b, &r); break;
    }
    if (overflow) {
        throw EvalError(EvalErrorKind::Overflow, "integer overflow in arithmetic");
    }
    return r;
}

// Substitutes bound variables and folds every arithmetic node whose operands
// became ground. Unbound variables stay in place. With a range, folded
// results outside it raise DropInstance.
Term substitute(const Term& t, const Binding& b, const std::optional<IntRange>& range) {
    return std::visit([&](const auto& v) -> Term {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Variable>) {
            auto it = b.find(v.name);
            return it == b.end() ? t : it->second;
        } else if constexpr (std::is_same_v<T, Function>) {
            TermVec args;
            args.reserve(v.args.size());
            for (const auto& a : v.args) {
                args.push_back(substitute(a, b, range));
            }
            return Term::function(v.name, std::move(args));
        } else if constexpr (std::is_same_v<T, Arith>) {
            Term l = substitute(*v.left, b, range);
            Term r = substitute(*v.right, b, range);
            if (!l.is_ground() || !r.is_ground()) {
                return Term::arith(v.op, l, r);
            }
            if (!l.is_integer() || !r.is_integer()) {
                throw EvalError(EvalErrorKind::TypeError,
                                "arithmetic on non-integer term in " + to_string(Term::arith(v.op, l, r)));
            }
            std::int64_t x = apply(v.op, l.integer_value(), r.integer_value());
            if (range && (x < range->min || x > range->max)) {
                throw DropInstance{};
            }
            return Term::integer(x);
        } else {
            return t;
        }
    }, t.value());
}

Literal substitute(const Literal& l, const Binding& b, const std::optional<IntRange>& range) {
    Literal out{l.negated, l.predicate, {}};
    out.args.reserve(l.args.size());
    for (const auto& a : l.args) {
        out.args.push_back(substitute(a, b, range));
    }
    return out;
}

SetName substitute(const SetName& s, const Binding& b, const std::optional<IntRange>& range) {
    SetName out{s.vars, {}, s.shorthand};
    for (const auto& l : s.cond) {
        out.cond.push_back(substitute(l, b, range));
    }
    return out;
}

void collect_integers(const Term& t, std::vector<std::int64_t>& out) {
    std::visit([&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
            out.push_back(v.value);
        } else if constexpr (std::is_same_v<T, Function>) {
            for (const auto& a : v.args) {
                collect_integers(a, out);
            }
        } else if constexpr (std::is_same_v<T, Arith>) {
            collect_integers(*v.left, out);
            collect_integers(*v.right, out);
        }
    }, t.value());
}

void collect_constants(const Term& t, std::vector<Term>& out) {
    std::visit([&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Constant>) {
            out.push_back(t);
        } else if constexpr (std::is_same_v<T, Function>) {
            for (const auto& a : v.args) {
                collect_constants(a, out);
            }
        } else if constexpr (std::is_same_v<T, Arith>) {
            collect_constants(*v.left, out);
            collect_constants(*v.right, out);
        }
    }, t.value());
}

template <class F> void for_each_term(const Rule& r, F&& f) {
    auto lit = [&](const Literal& l) {
        for (const auto& a : l.args) {
            f(a);
        }
    };
    auto set = [&](const SetName& s) {
        for (const auto& l : s.cond) {
            lit(l);
        }
    };
    if (const auto* d = std::get_if<Disjunction>(&r.head)) {
        for (const auto& l : d->literals) {
            lit(l);
        }
    } else {
        set(std::get<SetIntro>(r.head).set);
    }
    for (const auto& e : r.body) {
        std::visit([&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Pos> || std::is_same_v<T, Naf>) {
                lit(x.lit);
            } else if constexpr (std::is_same_v<T, Comparison>) {
                f(x.left);
                f(x.right);
            } else {
                for (const SetName* s : set_names(x)) {
                    set(*s);
                }
                if (const auto* agg = std::get_if<AggCmp>(&x)) {
                    f(agg->bound);
                }
            }
        }, e);
    }
}

void collect_set_free_vars(const SetName& s, std::vector<std::string>& out) {
    std::vector<std::string> inner;
    for (const auto& l : s.cond) {
        l.collect_variables(inner);
    }
    for (const auto& v : inner) {
        if (std::find(s.vars.begin(), s.vars.end(), v) == s.vars.end() &&
            std::find(out.begin(), out.end(), v) == out.end()) {
            out.push_back(v);
        }
    }
}

// Rule variables in first-occurrence order, and the subset that occurs
// somewhere other than under `not`.
struct RuleVars {
    std::vector<std::string> all;
    std::set<std::string> safe;
};

RuleVars rule_variables(const Rule& r) {
    RuleVars rv;
    auto add = [&rv](const std::vector<std::string>& vs, bool safe) {
        for (const auto& v : vs) {
            if (std::find(rv.all.begin(), rv.all.end(), v) == rv.all.end()) {
                rv.all.push_back(v);
            }
            if (safe) {
                rv.safe.insert(v);
            }
        }
    };
    std::vector<std::string> vs;
    if (const auto* d = std::get_if<Disjunction>(&r.head)) {
        for (const auto& l : d->literals) {
            l.collect_variables(vs);
        }
    } else {
        collect_set_free_vars(std::get<SetIntro>(r.head).set, vs);
    }
    add(vs, true);
    for (const auto& e : r.body) {
        vs.clear();
        bool safe = true;
        std::visit([&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Pos>) {
                x.lit.collect_variables(vs);
            } else if constexpr (std::is_same_v<T, Naf>) {
                x.lit.collect_variables(vs);
                safe = false;
            } else if constexpr (std::is_same_v<T, Comparison>) {
                x.left.collect_variables(vs);
                x.right.collect_variables(vs);
            } else {
                for (const SetName* s : set_names(x)) {
                    collect_set_free_vars(*s, vs);
                }
                if (const auto* agg = std::get_if<AggCmp>(&x)) {
                    agg->bound.collect_variables(vs);
                }
            }
        }, e);
        add(vs, safe);
    }
    return rv;
}

bool unify(const Term& pattern, const Term& ground, Binding& b) {
    if (const auto* v = std::get_if<Variable>(&pattern.value())) {
        auto [it, inserted] = b.emplace(v->name, ground);
        return inserted || it->second == ground;
    }
    if (const auto* f = std::get_if<Function>(&pattern.value())) {
        const auto* g = std::get_if<Function>(&ground.value());
        if (g == nullptr || g->name != f->name || g->args.size() != f->args.size()) {
            return false;
        }
        for (std::size_t i = 0; i != f->args.size(); ++i) {
            if (!unify(f->args[i], g->args[i], b)) {
                return false;
            }
        }
        return true;
    }
    return pattern == ground;
}

class SetNameGrounder {
public:
    explicit SetNameGrounder(Universe& u) : u_(u) {}

    GroundSetName operator()(const SetName& pattern) {
        SetName key = pattern;
        key.shorthand.reset();
        std::string k = format_set_name(key);
        auto it = cache_.find(k);
        if (it == cache_.end()) {
            it = cache_.emplace(k, compute(pattern)).first;
        }
        GroundSetName g = it->second;
        g.pattern = pattern;
        return g;
    }

private:
    GroundSetName compute(const SetName& pattern) {
        std::vector<std::pair<Tuple, std::vector<LitId>>> found;
        std::vector<LitId> ids;
        join(pattern, 0, Binding{}, ids, found);
        std::sort(found.begin(), found.end());
        GroundSetName g;
        g.pattern = pattern;
        std::set<LitId> domain;
        for (auto& [tuple, cond] : found) {
            std::sort(cond.begin(), cond.end());
            cond.erase(std::unique(cond.begin(), cond.end()), cond.end());
            domain.insert(cond.begin(), cond.end());
            g.instances.push_back(SetInstance{u_.intern_tuple(tuple), std::move(cond)});
        }
        g.domain.assign(domain.begin(), domain.end());
        return g;
    }

    void join(const SetName& s, std::size_t i, const Binding& b, std::vector<LitId>& ids,
              std::vector<std::pair<Tuple, std::vector<LitId>>>& out) {
        if (i == s.cond.size()) {
            Tuple t;
            for (const auto& v : s.vars) {
                t.push_back(b.at(v));
            }
            out.emplace_back(std::move(t), ids);
            return;
        }
        const Literal& pat = s.cond[i];
        for (LitId pos : u_.positive_literals(pat.predicate)) {
            LitId id = pat.negated ? u_.complement(pos) : pos;
            const auto& args = u_.literal(id).args();
            if (args.size() != pat.args.size()) {
                continue;
            }
            Binding next = b;
            bool ok = true;
            for (std::size_t k = 0; ok && k != args.size(); ++k) {
                ok = unify(pat.args[k], args[k], next);
            }
            if (ok) {
                ids.push_back(id);
                join(s, i + 1, next, ids, out);
                ids.pop_back();
            }
        }
    }

    Universe& u_;
    std::map<std::string, GroundSetName> cache_;
};

void check_depth(const Term& t, const DomainConfig& d) {
    if (t.depth() > d.max_function_depth) {
        throw CapExceeded(CapKind::DomainTooLarge, "function nesting depth of " + to_string(t),
                          d.max_function_depth, t.depth());
    }
}

} // namespace

Term eval_arith(const Term& t, const Binding& binding) {
    Term r = substitute(t, binding, std::nullopt);
    if (!r.is_ground()) {
        throw std::invalid_argument("unbound variable in " + to_string(t));
    }
    return r;
}

std::optional<IntRange> effective_int_range(const Program& p, const DomainConfig& d) {
    if (d.int_range) {
        return d.int_range;
    }
    if (p.signature.int_range) {
        return p.signature.int_range;
    }
    std::vector<std::int64_t> ints;
    for (const auto& r : p.rules) {
        for_each_term(r, [&ints](const Term& t) { collect_integers(t, ints); });
    }
    if (ints.empty()) {
        return std::nullopt;
    }
    auto [lo, hi] = std::minmax_element(ints.begin(), ints.end());
    return IntRange{*lo, *hi};
}

GroundProgram ground_program(const Program& p, const DomainConfig& d) {
    const auto range = effective_int_range(p, d);

    std::vector<Term> pool;
    if (range) {
        if (range->min > range->max) {
            throw std::invalid_argument("empty integer range");
        }
        auto width = static_cast<std::uint64_t>(range->max) - static_cast<std::uint64_t>(range->min) + 1;
        if (width == 0 || width > d.max_range_size) {
            throw CapExceeded(CapKind::DomainTooLarge, "integer range size", d.max_range_size,
                              width == 0 ? SIZE_MAX : width);
        }
        for (std::int64_t i = range->min;; ++i) {
            pool.push_back(Term::integer(i));
            if (i == range->max) {
                break;
            }
        }
    }
    for (const auto& c : d.constants) {
        pool.push_back(Term::constant(c));
    }
    for (const auto& r : p.rules) {
        for_each_term(r, [&pool](const Term& t) { collect_constants(t, pool); });
        auto ground_arg = [&pool](const Literal& l) {
            for (const auto& a : l.args) {
                if (a.is_ground()) {
                    pool.push_back(a);
                }
            }
        };
        if (const auto* h = std::get_if<Disjunction>(&r.head)) {
            std::for_each(h->literals.begin(), h->literals.end(), ground_arg);
        }
        for (const auto& e : r.body) {
            if (const auto* pl = std::get_if<Pos>(&e)) {
                ground_arg(pl->lit);
            } else if (const auto* nl = std::get_if<Naf>(&e)) {
                ground_arg(nl->lit);
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    // Phase 1: instantiate rule variables.
    std::vector<Rule> instances;
    std::size_t tried = 0;
    for (std::size_t ri = 0; ri != p.rules.size(); ++ri) {
        const Rule& rule = p.rules[ri];
        RuleVars rv = rule_variables(rule);
        for (const auto& v : rv.all) {
            if (!rv.safe.contains(v)) {
                throw ParseError(ParseErrorKind::Scope, 0, 0,
                                 "rule " + std::to_string(ri + 1) + " (" + format_rule(rule) +
                                     "): variable " + v + " occurs only under 'not'");
            }
        }
        std::size_t k = rv.all.size();
        if (k > 0 && pool.empty()) {
            continue;
        }
        std::size_t count = 1;
        for (std::size_t i = 0; i != k; ++i) {
            if (count > d.max_instances / pool.size()) {
                count = d.max_instances + 1;
                break;
            }
            count *= pool.size();
        }
        tried += count;
        if (tried > d.max_instances) {
            throw CapExceeded(CapKind::DomainTooLarge, "ground rule instances", d.max_instances, tried);
        }
        std::vector<std::size_t> idx(k, 0);
        for (;;) {
            Binding b;
            for (std::size_t i = 0; i != k; ++i) {
                b.emplace(rv.all[i], pool[idx[i]]);
            }
            try {
                Rule g;
                if (const auto* h = std::get_if<Disjunction>(&rule.head)) {
                    Disjunction out;
                    for (const auto& l : h->literals) {
                        out.literals.push_back(substitute(l, b, range));
                    }
                    g.head = std::move(out);
                } else {
                    const auto& intro = std::get<SetIntro>(rule.head);
                    g.head = SetIntro{intro.kind, intro.predicate, substitute(intro.set, b, range)};
                }
                for (const auto& e : rule.body) {
                    std::visit([&](const auto& x) {
                        using T = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<T, Pos>) {
                            g.body.emplace_back(Pos{substitute(x.lit, b, range)});
                        } else if constexpr (std::is_same_v<T, Naf>) {
                            g.body.emplace_back(Naf{substitute(x.lit, b, range)});
                        } else if constexpr (std::is_same_v<T, Comparison>) {
                            Term l = substitute(x.left, b, range);
                            Term r = substitute(x.right, b, range);
                            if (!compare(l, x.rel, r)) {
                                throw DropInstance{};
                            }
                        } else {
                            SetAtom a = std::visit([&](const auto& sa) -> SetAtom {
                                using S = std::decay_t<decltype(sa)>;
                                if constexpr (std::is_same_v<S, AggCmp>) {
                                    Term bound = substitute(sa.bound, b, range);
                                    if (!bound.is_integer()) {
                                        throw DropInstance{};
                                    }
                                    return AggCmp{sa.fn, substitute(sa.set, b, range), sa.rel, bound};
                                } else if constexpr (std::is_same_v<S, AggAggCmp>) {
                                    return AggAggCmp{sa.left_fn, substitute(sa.left, b, range), sa.rel,
                                                     sa.right_fn, substitute(sa.right, b, range)};
                                } else {
                                    return SetRel{substitute(sa.left, b, range), sa.rel,
                                                  substitute(sa.right, b, range)};
                                }
                            }, x);
                            g.body.emplace_back(std::move(a));
                        }
                    }, e);
                }
                instances.push_back(std::move(g));
            } catch (const DropInstance&) {
            } catch (const EvalError& e) {
                if (e.kind() != EvalErrorKind::TypeError) {
                    throw;
                }
            }
            std::size_t i = k;
            while (i > 0) {
                if (++idx[i - 1] < pool.size()) {
                    break;
                }
                idx[i - 1] = 0;
                --i;
            }
            if (i == 0) {
                break;
            }
        }
    }

    // Phase 2: the universe over every term the instances mention.
    Universe::Builder builder(d.max_universe);
    for (const auto& [name, arity] : p.signature.arities) {
        builder.add_predicate(name, arity);
    }
    for (const auto& t : pool) {
        builder.add_term(t);
    }
    for (const auto& r : instances) {
        for_each_term(r, [&](const Term& t) {
            if (t.is_ground()) {
                check_depth(t, d);
                builder.add_term(t);
            }
        });
        auto preds = [&builder](const Literal& l) { builder.add_predicate(l.predicate, l.args.size()); };
        if (const auto* h = std::get_if<Disjunction>(&r.head)) {
            std::for_each(h->literals.begin(), h->literals.end(), preds);
        }
    }
    for (const auto& r : p.rules) {
        if (const auto* intro = std::get_if<SetIntro>(&r.head)) {
            builder.add_predicate(intro->predicate, intro->set.vars.size());
        }
    }
    std::shared_ptr<Universe> universe = builder.build();

    // Phase 3: literal ids and set-name instance tables.
    SetNameGrounder sets(*universe);
    GroundProgram out;
    for (const auto& r : instances) {
        GroundRule g;
        if (const auto* h = std::get_if<Disjunction>(&r.head)) {
            GroundDisjunction gd;
            for (const auto& l : h->literals) {
                gd.literals.push_back(universe->id_of(GroundLiteral(l)));
            }
            g.head = std::move(gd);
        } else {
            const auto& intro = std::get<SetIntro>(r.head);
            auto ext = universe->positive_literals(intro.predicate);
            g.head = GroundSetIntro{intro.kind, intro.predicate, {ext.begin(), ext.end()}, sets(intro.set)};
        }
        for (const auto& e : r.body) {
            if (const auto* pl = std::get_if<Pos>(&e)) {
                g.body.emplace_back(PosLit{universe->id_of(GroundLiteral(pl->lit))});
            } else if (const auto* nl = std::get_if<Naf>(&e)) {
                g.body.emplace_back(NafLit{universe->id_of(GroundLiteral(nl->lit))});
            } else {
                const auto& sa = std::get<SetAtom>(e);
                GroundSetAtom ga = std::visit([&](const auto& x) -> GroundSetAtom {
                    using S = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<S, AggCmp>) {
                        return GroundAggCmp{x.fn, sets(x.set), x.rel, x.bound.integer_value()};
                    } else if constexpr (std::is_same_v<S, AggAggCmp>) {
                        return GroundAggAggCmp{x.left_fn, sets(x.left), x.rel, x.right_fn, sets(x.right)};
                    } else {
                        return GroundSetRel{sets(x.left), x.rel, sets(x.right)};
                    }
                }, sa);
                g.body.emplace_back(std::move(ga));
            }
        }
        out.rules.push_back(std::move(g));
    }
    out.universe = std::move(universe);
    return out;
}

std::vector<GroundLiteral> herbrand_atoms(const GroundProgram& g) {
    std::vector<GroundLiteral> out;
    out.reserve(g.u().size());
    for (LitId id = 0; id != g.u().size(); ++id) {
        out.push_back(g.u().literal(id));
    }
    return out;
}

} // namespace alogsets
