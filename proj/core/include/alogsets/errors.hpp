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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alogsets {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Lexical, Syntax, Scope, Arity };

const char* to_string(ParseErrorKind kind);

/// Raised by the parser and by the grounder's safety check. Line and column
/// are 1-based; both are 0 when the error has no source position.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string message);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

enum class EvalErrorKind { TypeError, Overflow };

class EvalError : public Error {
public:
    EvalError(EvalErrorKind kind, const std::string& message)
        : Error(message), kind_(kind) {}
    EvalErrorKind kind() const noexcept { return kind_; }

private:
    EvalErrorKind kind_;
};

enum class CapKind { DomainTooLarge, UniverseTooLarge };

/// A configured brute-force limit was exceeded. Never recovered from silently.
class CapExceeded : public Error {
public:
    CapExceeded(CapKind kind, std::string what, std::size_t limit, std::size_t requested);

    CapKind kind() const noexcept { return kind_; }
    std::size_t limit() const noexcept { return limit_; }
    std::size_t requested() const noexcept { return requested_; }

private:
    CapKind kind_;
    std::size_t limit_;
    std::size_t requested_;
};

class NotASplittingSet : public Error {
public:
    using Error::Error;
};

} // namespace alogsets
