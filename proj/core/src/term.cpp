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
#include <alogsets/term.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

namespace alogsets {

Term Term::function(std::string name, TermVec args) {
    if (args.empty()) {
        return constant(std::move(name));
    }
    return Term(Function{std::move(name), std::move(args)});
}

Term Term::arith(ArithOp op, Term lhs, Term rhs) {
    return Term(Arith{op, std::make_shared<const Term>(std::move(lhs)),
                      std::make_shared<const Term>(std::move(rhs))});
}

bool Term::is_ground() const {
    return std::visit([](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Function>) {
            return std::all_of(v.args.begin(), v.args.end(), [](const Term& a) { return a.is_ground(); });
        } else if constexpr (std::is_same_v<T, Variable> || std::is_same_v<T, Arith>) {
            return false;
        } else {
            return true;
        }
    }, value_);
}

bool Term::has_arith() const {
    if (is<Arith>()) {
        return true;
    }
    if (is<Function>()) {
        const auto& f = as<Function>();
        return std::any_of(f.args.begin(), f.args.end(), [](const Term& a) { return a.has_arith(); });
    }
    return false;
}

std::size_t Term::depth() const {
    if (is<Function>()) {
        std::size_t d = 0;
        for (const auto& a : as<Function>().args) {
            d = std::max(d, a.depth());
        }
        return d + 1;
    }
    if (is<Arith>()) {
        const auto& a = as<Arith>();
        return std::max(a.left->depth(), a.right->depth());
    }
    return 0;
}

void Term::collect_variables(std::vector<std::string>& out) const {
    std::visit([&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Variable>) {
            if (std::find(out.begin(), out.end(), v.name) == out.end()) {
                out.push_back(v.name);
            }
        } else if constexpr (std::is_same_v<T, Function>) {
            for (const auto& a : v.args) {
                a.collect_variables(out);
            }
        } else if constexpr (std::is_same_v<T, Arith>) {
            v.left->collect_variables(out);
            v.right->collect_variables(out);
        }
    }, value_);
}

bool operator==(const Term& a, const Term& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

namespace {
std::strong_ordering compare_args(const TermVec& x, const TermVec& y) {
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}
} // namespace

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.value_.index() <=> b.value_.index(); c != 0) {
        return c;
    }
    switch (a.value_.index()) {
    case 0:
        return a.as<Integer>().value <=> b.as<Integer>().value;
    case 1:
        return a.as<Constant>().name <=> b.as<Constant>().name;
    case 2: {
        const auto& x = a.as<Function>();
        const auto& y = b.as<Function>();
        if (auto c = x.name <=> y.name; c != 0) {
            return c;
        }
        if (auto c = x.args.size() <=> y.args.size(); c != 0) {
            return c;
        }
        return compare_args(x.args, y.args);
    }
    case 3:
        return a.as<Variable>().name <=> b.as<Variable>().name;
    default: {
        const auto& x = a.as<Arith>();
        const auto& y = b.as<Arith>();
        if (auto c = static_cast<int>(x.op) <=> static_cast<int>(y.op); c != 0) {
            return c;
        }
        if (auto c = *x.left <=> *y.left; c != 0) {
            return c;
        }
        return *x.right <=> *y.right;
    }
    }
}

namespace {
const char* op_symbol(ArithOp op) {
    switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    }
    return "?";
}

int precedence(const Term& t) {
    if (!t.is<Arith>()) {
        return 3;
    }
    return t.as<Arith>().op == ArithOp::Mul ? 2 : 1;
}
} // namespace

std::ostream& operator<<(std::ostream& out, const Term& t) {
    std::visit([&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
            out << v.value;
        } else if constexpr (std::is_same_v<T, Constant> || std::is_same_v<T, Variable>) {
            out << v.name;
        } else if constexpr (std::is_same_v<T, Function>) {
            out << v.name << '(';
            for (std::size_t i = 0; i != v.args.size(); ++i) {
                out << (i ? "," : "") << v.args[i];
            }
            out << ')';
        } else {
            // Parenthesize children that bind weaker; the right child of '-'
            // also needs parentheses at equal precedence.
            int self = v.op == ArithOp::Mul ? 2 : 1;
            bool lp = precedence(*v.left) < self;
            bool rp = precedence(*v.right) < self || (precedence(*v.right) == self && v.op == ArithOp::Sub);
            bool neg_right = v.right->is_integer() && v.right->integer_value() < 0;
            if (lp) out << '(';
            out << *v.left;
            if (lp) out << ')';
            out << op_symbol(v.op);
            if (rp || neg_right) out << '(';
            out << *v.right;
            if (rp || neg_right) out << ')';
        }
    }, t.value());
    return out;
}

std::string to_string(const Term& t) {
    std::ostringstream out;
    out << t;
    return out.str();
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
    std::size_t seed = t.value().index();
    auto mix = [&seed](std::size_t h) { seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
    std::visit([&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
            mix(std::hash<std::int64_t>{}(v.value));
        } else if constexpr (std::is_same_v<T, Constant> || std::is_same_v<T, Variable>) {
            mix(std::hash<std::string>{}(v.name));
        } else if constexpr (std::is_same_v<T, Function>) {
            mix(std::hash<std::string>{}(v.name));
            for (const auto& a : v.args) {
                mix((*this)(a));
            }
        } else {
            mix(static_cast<std::size_t>(v.op));
            mix((*this)(*v.left));
            mix((*this)(*v.right));
        }
    }, t.value());
    return seed;
}

} // namespace alogsets
