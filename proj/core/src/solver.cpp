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
#include <alogsets/solver.hpp>

#include <algorithm>
#include <set>

namespace alogsets {

const char* to_string(Semantics s) {
    return s == Semantics::Alog ? "alog" : "slog+";
}

std::vector<LitId> candidate_universe(const GroundProgram& g) {
    std::set<LitId> ids;
    for (const auto& r : g.rules) {
        if (const auto* d = std::get_if<GroundDisjunction>(&r.head)) {
            ids.insert(d->literals.begin(), d->literals.end());
        } else {
            const auto& intro = std::get<GroundSetIntro>(r.head);
            ids.insert(intro.extension.begin(), intro.extension.end());
        }
    }
    return {ids.begin(), ids.end()};
}

bool is_answer_set(const GroundProgram& g, const Interpretation& a, Semantics s, const SolveOptions& o) {
    if (!is_consistent(a, g.u())) {
        return false;
    }
    if (s == Semantics::Alog) {
        return is_alog_answer_set(g, a, o.slog.basic);
    }
    return is_slogp_answer_set(g, a, o.slog);
}

std::vector<Interpretation> solve_over(const GroundProgram& g, std::span<const LitId> domain, Semantics s,
                                       const SolveOptions& o) {
    if (domain.size() > o.max_candidate_bits) {
        throw CapExceeded(CapKind::UniverseTooLarge, "candidate literal count", o.max_candidate_bits, domain.size());
    }
    const Universe& u = g.u();
    std::vector<Interpretation> out;
    const std::uint64_t n = std::uint64_t{1} << domain.size();
    for (std::uint64_t mask = 0; mask != n; ++mask) {
        Interpretation a(u.size());
        bool consistent = true;
        for (std::size_t i = 0; consistent && i != domain.size(); ++i) {
            if ((mask >> i) & 1u) {
                consistent = !a.contains(u.complement(domain[i]));
                a.insert(domain[i]);
            }
        }
        if (consistent && is_answer_set(g, a, s, o)) {
            out.push_back(std::move(a));
        }
    }
    std::sort(out.begin(), out.end(), answer_set_less);
    return out;
}

std::vector<Interpretation> solve(const GroundProgram& g, Semantics s, const SolveOptions& o) {
    auto domain = candidate_universe(g);
    return solve_over(g, domain, s, o);
}

} // namespace alogsets
