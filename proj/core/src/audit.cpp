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
#include <alogsets/audit.hpp>
#include <alogsets/evaluator.hpp>
#include <alogsets/parser.hpp>
#include <alogsets/splitting.hpp>

#include <algorithm>

namespace alogsets {

namespace {

std::string describe(const Universe& u, std::span<const Interpretation> sets) {
    std::string out = "[";
    for (std::size_t i = 0; i != sets.size(); ++i) {
        out += (i ? ", " : "") + format_interpretation(u, sets[i]);
    }
    return out + "]";
}

bool literal_supported(const GroundProgram& g, const Interpretation& a, LitId l) {
    const Universe& u = g.u();
    for (const auto& r : g.rules) {
        if (eval_body(r.body, a, u) != TruthValue::True) {
            continue;
        }
        if (const auto* d = std::get_if<GroundDisjunction>(&r.head)) {
            bool has_l = false;
            bool other_true = false;
            for (LitId id : d->literals) {
                has_l = has_l || id == l;
                other_true = other_true || (id != l && a.contains(id));
            }
            if (has_l && !other_true) {
                return true;
            }
            continue;
        }
        const auto& intro = std::get<GroundSetIntro>(r.head);
        if (std::find(intro.extension.begin(), intro.extension.end(), l) == intro.extension.end()) {
            continue;
        }
        TupleId t = u.tuple_of(l);
        for (const auto& inst : intro.set.instances) {
            if (inst.tuple == t && a.contains_all(inst.cond)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

bool audit_rule_satisfaction(const GroundProgram& g, const Interpretation& a) {
    return std::all_of(g.rules.begin(), g.rules.end(),
                       [&](const GroundRule& r) { return rule_satisfied(r, a, g.u()); });
}

bool audit_supportedness(const GroundProgram& g, const Interpretation& a) {
    for (LitId l : a.ids()) {
        if (!literal_supported(g, a, l)) {
            return false;
        }
    }
    return true;
}

bool audit_antichain(std::span<const Interpretation> answer_sets) {
    for (std::size_t i = 0; i != answer_sets.size(); ++i) {
        for (std::size_t j = 0; j != answer_sets.size(); ++j) {
            if (i != j && answer_sets[i].is_subset_of(answer_sets[j]) && !(answer_sets[i] == answer_sets[j])) {
                return false;
            }
        }
    }
    return true;
}

std::uint64_t audit_seed(std::uint64_t base, std::size_t i) {
    // splitmix64 step, so neighbouring seeds give unrelated programs.
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

AuditReport audit_alog_within_slog(std::uint64_t seed, std::size_t count, const AuditOptions& o) {
    AuditReport rep{"alog answer sets are slog+ answer sets", 0, 0, 0, {}, {}};
    for (std::size_t i = 0; i != count; ++i) {
        std::uint64_t s = audit_seed(seed, i);
        auto inst = random_instance(s, o.programs);
        auto alog = solve(inst.ground, Semantics::Alog, o.solve);
        ++rep.programs;
        for (const auto& a : alog) {
            ++rep.checks;
            if (!is_answer_set(inst.ground, a, Semantics::SlogPlus, o.solve)) {
                rep.violations.push_back({s, pretty_print(inst.program),
                                          format_interpretation(inst.ground.u(), a) +
                                              " is an alog answer set but not an slog+ answer set"});
            }
        }
    }
    return rep;
}

AuditReport audit_answer_set_properties(std::uint64_t seed, std::size_t count, const AuditOptions& o) {
    AuditReport rep{"rule satisfaction, supportedness and anti-chain", 0, 0, 0, {}, {}};
    for (std::size_t i = 0; i != count; ++i) {
        std::uint64_t s = audit_seed(seed, i);
        auto inst = random_instance(s, o.programs);
        const auto& g = inst.ground;
        ++rep.programs;
        for (Semantics sem : {Semantics::Alog, Semantics::SlogPlus}) {
            auto sets = solve(g, sem, o.solve);
            for (const auto& a : sets) {
                rep.checks += 2;
                if (!audit_rule_satisfaction(g, a)) {
                    rep.violations.push_back({s, pretty_print(inst.program),
                                              std::string(to_string(sem)) + " answer set " +
                                                  format_interpretation(g.u(), a) + " violates a rule"});
                }
                if (!audit_supportedness(g, a)) {
                    rep.violations.push_back({s, pretty_print(inst.program),
                                              std::string(to_string(sem)) + " answer set " +
                                                  format_interpretation(g.u(), a) + " has an unsupported literal"});
                }
            }
            if (g.has_set_intro()) {
                ++rep.skipped;
                continue;
            }
            ++rep.checks;
            if (!audit_antichain(sets)) {
                rep.violations.push_back({s, pretty_print(inst.program),
                                          std::string(to_string(sem)) + " answer sets are not an anti-chain: " +
                                              describe(g.u(), sets)});
            }
        }
    }
    return rep;
}

AuditReport audit_splitting(std::uint64_t seed, std::size_t count, Semantics sem, const AuditOptions& o) {
    AuditReport rep{std::string("splitting equivalence under ") + to_string(sem), 0, 0, 0, {}, {}};
    for (std::size_t i = 0; i != count; ++i) {
        std::uint64_t s = audit_seed(seed, i);
        auto inst = random_instance(s, o.programs);
        std::mt19937_64 rng(s ^ 0x5bd1e995ULL);
        Interpretation split_set = random_splitting_set(inst.ground, rng);
        ++rep.programs;
        auto res = audit_splitting_theorem(inst.ground, split_set, sem, o.solve);
        rep.checks += res.candidates;
        if (!res.holds) {
            AuditFinding f{s, pretty_print(inst.program), *res.counterexample};
            (sem == Semantics::Alog ? rep.violations : rep.findings).push_back(std::move(f));
        }
    }
    return rep;
}

AuditReport audit_basic_oracle(std::uint64_t seed, std::size_t count, const AuditOptions& o) {
    AuditReport rep{"set-free programs agree with basic answer sets", 0, 0, 0, {}, {}};
    AuditOptions local = o;
    local.programs.set_atoms = false;
    local.programs.set_intro = false;
    if (local.programs.max_universe == 0) {
        local.programs.max_universe = 16;
    }
    for (std::size_t i = 0; i != count; ++i) {
        std::uint64_t s = audit_seed(seed, i);
        auto inst = random_instance(s, local.programs);
        const auto& g = inst.ground;
        ++rep.programs;
        auto expected = answer_sets_basic(to_basic(g), local.programs.max_universe);
        for (Semantics sem : {Semantics::Alog, Semantics::SlogPlus}) {
            ++rep.checks;
            auto got = solve(g, sem, local.solve);
            if (got != expected) {
                rep.violations.push_back({s, pretty_print(inst.program),
                                          std::string(to_string(sem)) + " gives " + describe(g.u(), got) +
                                              ", basic answer sets are " + describe(g.u(), expected)});
            }
        }
    }
    return rep;
}

AuditReport audit_candidate_restriction(std::uint64_t seed, std::size_t count, const AuditOptions& o) {
    AuditReport rep{"candidate universe loses no answer sets", 0, 0, 0, {}, {}};
    AuditOptions local = o;
    if (local.programs.max_universe == 0) {
        local.programs.max_universe = 10;
    }
    for (std::size_t i = 0; i != count; ++i) {
        std::uint64_t s = audit_seed(seed, i);
        auto inst = random_instance(s, local.programs);
        const auto& g = inst.ground;
        ++rep.programs;
        std::vector<LitId> all(g.u().size());
        for (LitId k = 0; k != all.size(); ++k) {
            all[k] = k;
        }
        for (Semantics sem : {Semantics::Alog, Semantics::SlogPlus}) {
            ++rep.checks;
            auto restricted = solve(g, sem, local.solve);
            auto full = solve_over(g, all, sem, local.solve);
            if (restricted != full) {
                rep.violations.push_back({s, pretty_print(inst.program),
                                          std::string(to_string(sem)) + " candidate search gives " +
                                              describe(g.u(), restricted) + ", full search gives " +
                                              describe(g.u(), full)});
            }
        }
    }
    return rep;
}

std::vector<AuditReport> run_all_audits(std::uint64_t seed, std::size_t count, const AuditOptions& o) {
    return {
        audit_alog_within_slog(seed, count, o),
        audit_answer_set_properties(seed, count, o),
        audit_splitting(seed, count, Semantics::Alog, o),
        audit_splitting(seed, count, Semantics::SlogPlus, o),
        audit_basic_oracle(seed, count, o),
        audit_candidate_restriction(seed, count, o),
    };
}

} // namespace alogsets
