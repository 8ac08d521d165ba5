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
#include <alogsets/universe.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace alogsets {

std::optional<LitId> Universe::find(const GroundLiteral& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

LitId Universe::id_of(const GroundLiteral& l) const {
    if (auto id = find(l)) {
        return *id;
    }
    throw std::out_of_range("literal " + to_string(l) + " is not in the universe");
}

std::span<const LitId> Universe::positive_literals(const std::string& predicate) const {
    auto it = by_predicate_.find(predicate);
    if (it == by_predicate_.end()) {
        return {};
    }
    return it->second;
}

std::optional<TupleId> Universe::find_tuple(const Tuple& t) const {
    auto it = tuple_index_.find(t);
    if (it == tuple_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void Universe::Builder::add_predicate(const std::string& name, std::size_t arity) {
    auto [it, inserted] = arities_.emplace(name, arity);
    if (!inserted && it->second != arity) {
        throw std::invalid_argument("predicate " + name + " registered with two arities");
    }
}

void Universe::Builder::add_term(const Term& t) {
    if (!t.is_ground()) {
        throw std::invalid_argument("term pool accepts ground terms only: " + to_string(t));
    }
    terms_.push_back(t);
}

TupleId Universe::intern_tuple(const Tuple& t) {
    auto [it, inserted] = tuple_index_.emplace(t, static_cast<TupleId>(tuples_.size()));
    if (inserted) {
        tuples_.push_back(t);
    }
    return it->second;
}

namespace {
std::size_t saturating_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t r = 1;
    for (std::size_t i = 0; i != exp; ++i) {
        if (base != 0 && r > limit / base) {
            return limit + 1;
        }
        r *= base;
    }
    return r;
}
} // namespace

std::shared_ptr<Universe> Universe::Builder::build() {
    auto u = std::make_shared<Universe>();
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
    u->terms_ = terms_;
    u->arities_ = arities_;

    std::size_t total = 0;
    for (const auto& [name, arity] : arities_) {
        std::size_t n = saturating_pow(terms_.size(), arity, max_literals_);
        total += 2 * n;
        if (total > max_literals_) {
            throw CapExceeded(CapKind::DomainTooLarge, "universe literal count", max_literals_, total);
        }
    }

    auto intern = [&u](const Tuple& t) { return u->intern_tuple(t); };

    // arities_ is ordered by name and tuples are enumerated in term order, so
    // literals come out sorted once polarity is interleaved.
    u->literals_.reserve(total);
    for (const auto& [name, arity] : arities_) {
        std::vector<std::size_t> idx(arity, 0);
        if (arity > 0 && terms_.empty()) {
            continue;
        }
        for (;;) {
            Tuple args;
            args.reserve(arity);
            for (std::size_t i : idx) {
                args.push_back(terms_[i]);
            }
            intern(args);
            u->literals_.emplace_back(false, name, args);
            u->literals_.emplace_back(true, name, std::move(args));
            std::size_t k = arity;
            while (k > 0) {
                if (++idx[k - 1] < terms_.size()) {
                    break;
                }
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) {
                break;
            }
        }
    }
    u->complement_.resize(u->literals_.size());
    u->literal_tuple_.resize(u->literals_.size());
    for (LitId i = 0; i != u->literals_.size(); ++i) {
        const auto& l = u->literals_[i];
        u->index_.emplace(l, i);
        u->complement_[i] = l.negated() ? i - 1 : i + 1;
        u->literal_tuple_[i] = u->tuple_index_.at(l.args());
        if (!l.negated()) {
            u->by_predicate_[l.predicate()].push_back(i);
        }
    }
    return u;
}

Interpretation::Interpretation(std::size_t universe_size)
    : universe_size_(universe_size), words_((universe_size + 63) / 64, 0) {}

Interpretation::Interpretation(std::size_t universe_size, std::span<const LitId> ids)
    : Interpretation(universe_size) {
    for (LitId id : ids) {
        insert(id);
    }
}

void Interpretation::insert(LitId id) {
    if (id >= universe_size_) {
        throw std::out_of_range("literal id outside universe");
    }
    words_[id >> 6] |= std::uint64_t{1} << (id & 63);
}

void Interpretation::erase(LitId id) {
    if (id < universe_size_) {
        words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    }
}

std::size_t Interpretation::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool Interpretation::is_subset_of(const Interpretation& other) const noexcept {
    for (std::size_t i = 0; i != words_.size(); ++i) {
        std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
        if ((words_[i] & ~o) != 0) {
            return false;
        }
    }
    return true;
}

bool Interpretation::contains_all(std::span<const LitId> ids) const noexcept {
    return std::all_of(ids.begin(), ids.end(), [this](LitId id) { return contains(id); });
}

std::vector<LitId> Interpretation::ids() const {
    std::vector<LitId> out;
    for (std::size_t w = 0; w != words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<LitId>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

Interpretation Interpretation::intersect(const Interpretation& other) const {
    Interpretation r(universe_size_);
    for (std::size_t i = 0; i != words_.size() && i != other.words_.size(); ++i) {
        r.words_[i] = words_[i] & other.words_[i];
    }
    return r;
}

Interpretation Interpretation::unite(const Interpretation& other) const {
    Interpretation r(*this);
    for (std::size_t i = 0; i != r.words_.size() && i != other.words_.size(); ++i) {
        r.words_[i] |= other.words_[i];
    }
    return r;
}

bool answer_set_less(const Interpretation& a, const Interpretation& b) {
    auto x = a.ids();
    auto y = b.ids();
    if (x.size() != y.size()) {
        return x.size() < y.size();
    }
    return x < y;
}

bool is_consistent(const Interpretation& a, const Universe& u) {
    for (LitId id : a.ids()) {
        if (a.contains(u.complement(id))) {
            return false;
        }
    }
    return true;
}

Interpretation make_interpretation(const Universe& u, std::span<const GroundLiteral> literals) {
    Interpretation a(u.size());
    for (const auto& l : literals) {
        a.insert(u.id_of(l));
    }
    return a;
}

std::vector<GroundLiteral> literals_of(const Universe& u, const Interpretation& a) {
    std::vector<GroundLiteral> out;
    for (LitId id : a.ids()) {
        out.push_back(u.literal(id));
    }
    return out;
}

std::string format_interpretation(const Universe& u, const Interpretation& a) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (LitId id : a.ids()) {
        out << (first ? "" : ", ") << u.literal(id);
        first = false;
    }
    out << '}';
    return out.str();
}

} // namespace alogsets
