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
#pragma once

#include <alogsets/base_asp.hpp>

#include <optional>

namespace alogsets {

// One literal set per set-name occurrence of a set atom, left to right.
struct SupportVector {
    std::vector<std::vector<LitId>> coords;
    friend bool operator==(const SupportVector&, const SupportVector&) = default;
    friend auto operator<=>(const SupportVector&, const SupportVector&) = default;
};

/// Undefined counts as not satisfied.
bool satisfied_by_vector(const GroundSetAtom& sa, const SupportVector& w, const Universe& u);

/// All minimal supports of `sa` in A. Coordinate i ranges over the literals of
/// A that are condition instances of set name i. Sorted by total size, then
/// lexicographically. Throws CapExceeded(UniverseTooLarge) when the summed
/// coordinate sizes exceed `max_bits`.
std::vector<SupportVector> minimal_supports(const GroundSetAtom& sa, const Interpretation& a, const Universe& u,
                                            std::size_t max_bits = 20);

struct SlogOptions {
    std::size_t max_reducts = 1'000'000;
    std::size_t max_support_bits = 20;
    BasicOptions basic;
};

// Lazily enumerates the weak set reducts of a program without
// set-introduction heads, in lexicographic order of support choices.
class WeakReducts {
public:
    WeakReducts(const GroundProgram& p, const Interpretation& a, const SlogOptions& o = {});

    /// Product of per-atom support counts, saturated at SIZE_MAX.
    std::size_t total() const noexcept { return total_; }
    std::size_t produced() const noexcept { return produced_; }
    /// Throws CapExceeded(UniverseTooLarge) past `max_reducts`.
    std::optional<BasicProgram> next();

    /// Decides whether A is an answer set of some weak set reduct without
    /// enumerating, when that is exact: A is not closed under the reducts, or
    /// no rule has more than one head literal. Returns nullopt otherwise. On
    /// a positive verdict `witness`, if given, receives one witnessing reduct.
    std::optional<bool> decide(const Interpretation& a, std::optional<BasicProgram>* witness) const;

private:
    // A body position holds either a fixed literal or a set atom slot.
    struct Piece {
        std::optional<BodyLit> lit;
        std::size_t slot = 0;
    };
    struct Template {
        std::vector<LitId> head;
        std::vector<Piece> body;
    };

    std::shared_ptr<const Universe> universe_;
    std::vector<Template> rules_;
    std::vector<std::vector<std::vector<LitId>>> choices_; // per slot, union of each support
    std::vector<std::size_t> counter_;
    std::size_t total_ = 1;
    std::size_t produced_ = 0;
    std::size_t cap_;
    bool done_ = false;

    BasicProgram assemble(const std::vector<std::size_t>& choice) const;
};

/// Every weak set reduct, eagerly; for small programs and tests.
std::vector<BasicProgram> weak_set_reducts(const GroundProgram& p, const Interpretation& a,
                                           const SlogOptions& o = {});

struct SlogCheck {
    bool answer_set = false;
    std::size_t tried = 0;
    std::size_t total = 0;
    /// False when the verdict came from WeakReducts::decide because the
    /// reducts outnumber the cap; `tried` is then 0.
    bool enumerated = true;
    std::optional<BasicProgram> witness;
};

/// Applies the set-introduction reduct, then searches the weak set reducts
/// for one that has A as an answer set, stopping at the first. Past the
/// reduct cap it falls back to WeakReducts::decide where that is exact.
SlogCheck check_slogp(const GroundProgram& p, const Interpretation& a, const SlogOptions& o = {});
/// Same verdict as check_slogp, trying WeakReducts::decide first.
bool is_slogp_answer_set(const GroundProgram& p, const Interpretation& a, const SlogOptions& o = {});

} // namespace alogsets
