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

#include <alogsets/model.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alogsets {

using LitId = std::uint32_t;
using TupleId = std::uint32_t;
using Tuple = TermVec;

// The finite stock of ground literals a ground program talks about: every
// predicate of the program applied to every tuple over the term pool, in
// both polarities. Literal ids follow literal order, so sorting ids sorts
// literals.
class Universe {
public:
    class Builder;

    std::size_t size() const noexcept { return literals_.size(); }
    const GroundLiteral& literal(LitId id) const { return literals_.at(id); }
    std::optional<LitId> find(const GroundLiteral& l) const;
    /// Throws std::out_of_range naming the literal when absent.
    LitId id_of(const GroundLiteral& l) const;
    LitId complement(LitId id) const { return complement_.at(id); }

    /// Ground term pool, sorted.
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::map<std::string, std::size_t>& arities() const noexcept { return arities_; }

    /// Ids of the positive literals p(t) for predicate p, in tuple order.
    std::span<const LitId> positive_literals(const std::string& predicate) const;

    const Tuple& tuple(TupleId id) const { return tuples_.at(id); }
    std::size_t tuple_count() const noexcept { return tuples_.size(); }
    std::optional<TupleId> find_tuple(const Tuple& t) const;
    /// Tuple id of the argument list of literal `id`.
    TupleId tuple_of(LitId id) const { return literal_tuple_.at(id); }
    /// Used while grounding set names whose tuples are not argument lists.
    TupleId intern_tuple(const Tuple& t);

private:
    std::vector<GroundLiteral> literals_;
    std::map<GroundLiteral, LitId> index_;
    std::vector<LitId> complement_;
    std::vector<Term> terms_;
    std::map<std::string, std::size_t> arities_;
    std::map<std::string, std::vector<LitId>> by_predicate_;
    std::vector<Tuple> tuples_;
    std::map<Tuple, TupleId> tuple_index_;
    std::vector<TupleId> literal_tuple_;
};

class Universe::Builder {
public:
    explicit Builder(std::size_t max_literals) : max_literals_(max_literals) {}

    void add_predicate(const std::string& name, std::size_t arity);
    void add_term(const Term& t);
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Throws CapExceeded when the literal count would exceed the limit.
    std::shared_ptr<Universe> build();

private:
    std::size_t max_literals_;
    std::map<std::string, std::size_t> arities_;
    std::vector<Term> terms_;
};

// A set of literals of one universe, stored as a bitset over literal ids.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t universe_size);
    Interpretation(std::size_t universe_size, std::span<const LitId> ids);

    std::size_t universe_size() const noexcept { return universe_size_; }
    bool contains(LitId id) const noexcept {
        return id < universe_size_ && ((words_[id >> 6] >> (id & 63)) & 1u) != 0;
    }
    void insert(LitId id);
    void erase(LitId id);
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool is_subset_of(const Interpretation& other) const noexcept;
    bool contains_all(std::span<const LitId> ids) const noexcept;
    /// Sorted ids.
    std::vector<LitId> ids() const;

    Interpretation intersect(const Interpretation& other) const;
    Interpretation unite(const Interpretation& other) const;

    friend bool operator==(const Interpretation& a, const Interpretation& b) {
        return a.universe_size_ == b.universe_size_ && a.words_ == b.words_;
    }

private:
    std::size_t universe_size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Orders by size, then lexicographically by sorted literal ids.
bool answer_set_less(const Interpretation& a, const Interpretation& b);

bool is_consistent(const Interpretation& a, const Universe& u);

/// Throws std::out_of_range if a literal is not in the universe.
Interpretation make_interpretation(const Universe& u, std::span<const GroundLiteral> literals);
std::vector<GroundLiteral> literals_of(const Universe& u, const Interpretation& a);
/// "{l1, l2, ...}" in literal order.
std::string format_interpretation(const Universe& u, const Interpretation& a);

} // namespace alogsets
