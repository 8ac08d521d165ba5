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
#include <alogsets/parser.hpp>

#include <sstream>

namespace alogsets {

namespace {

bool printed_as_braces(const SetName& s) {
    return !s.shorthand;
}

void print_set_name(std::ostream& out, const SetName& s) {
    if (s.shorthand) {
        out << *s.shorthand;
        return;
    }
    out << '{';
    for (std::size_t i = 0; i != s.vars.size(); ++i) {
        out << (i ? ", " : "") << s.vars[i];
    }
    out << (s.vars.empty() ? ": " : " : ");
    for (std::size_t i = 0; i != s.cond.size(); ++i) {
        out << (i ? ", " : "") << s.cond[i];
    }
    out << '}';
}

const char* set_rel_symbol(SetRelOp op, bool plain) {
    switch (op) {
    case SetRelOp::Subset: return plain ? "<" : "<s";
    case SetRelOp::SubsetEq: return plain ? "<=" : "<=s";
    case SetRelOp::Equal: return plain ? "=" : "=s";
    }
    return "?";
}

void print_set_atom(std::ostream& out, const SetAtom& atom) {
    std::visit([&out](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, AggCmp>) {
            out << to_string(a.fn);
            print_set_name(out, a.set);
            out << ' ' << to_string(a.rel) << ' ' << a.bound;
        } else if constexpr (std::is_same_v<T, AggAggCmp>) {
            out << to_string(a.left_fn);
            print_set_name(out, a.left);
            out << ' ' << to_string(a.rel) << ' ' << to_string(a.right_fn);
            print_set_name(out, a.right);
        } else {
            print_set_name(out, a.left);
            bool plain = printed_as_braces(a.left) || printed_as_braces(a.right);
            out << ' ' << set_rel_symbol(a.rel, plain) << ' ';
            print_set_name(out, a.right);
        }
    }, atom);
}

void print_head(std::ostream& out, const Head& head) {
    if (const auto* d = std::get_if<Disjunction>(&head)) {
        for (std::size_t i = 0; i != d->literals.size(); ++i) {
            out << (i ? " | " : "") << d->literals[i];
        }
        return;
    }
    const auto& intro = std::get<SetIntro>(head);
    switch (intro.kind) {
    case IntroKind::SubsetOf:
        out << intro.predicate << " <= ";
        print_set_name(out, intro.set);
        break;
    case IntroKind::Equals:
        out << intro.predicate << " = ";
        print_set_name(out, intro.set);
        break;
    case IntroKind::SupersetOf: {
        // `q <= p` would read back as p being a subset of q.
        SetName explicit_set = intro.set;
        explicit_set.shorthand.reset();
        print_set_name(out, explicit_set);
        out << " <= " << intro.predicate;
        break;
    }
    }
}

void print_rule(std::ostream& out, const Rule& r) {
    std::ostringstream head;
    print_head(head, r.head);
    std::string h = head.str();
    out << h;
    if (!r.body.empty() || h.empty()) {
        out << (h.empty() ? ":-" : " :-");
        for (std::size_t i = 0; i != r.body.size(); ++i) {
            out << (i ? ", " : " ");
            std::visit([&out](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, Pos>) {
                    out << e.lit;
                } else if constexpr (std::is_same_v<T, Naf>) {
                    out << "not " << e.lit;
                } else if constexpr (std::is_same_v<T, Comparison>) {
                    out << e.left << ' ' << to_string(e.rel) << ' ' << e.right;
                } else {
                    print_set_atom(out, e);
                }
            }, r.body[i]);
        }
        if (r.body.empty()) {
            out << ' ';
        }
    }
    out << '.';
}

} // namespace

std::string format_set_name(const SetName& s) {
    std::ostringstream out;
    print_set_name(out, s);
    return out.str();
}

std::string format_set_atom(const SetAtom& a) {
    std::ostringstream out;
    print_set_atom(out, a);
    return out.str();
}

std::string format_rule(const Rule& r) {
    std::ostringstream out;
    print_rule(out, r);
    return out.str();
}

std::string pretty_print(const Program& p) {
    std::ostringstream out;
    if (p.signature.int_range) {
        out << "#int(" << p.signature.int_range->min << "," << p.signature.int_range->max << ").\n";
    }
    for (const auto& r : p.rules) {
        print_rule(out, r);
        out << '\n';
    }
    return out.str();
}

} // namespace alogsets
