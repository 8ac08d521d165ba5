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

#include <alogsets/alog.hpp>
#include <alogsets/audit.hpp>
#include <alogsets/base_asp.hpp>
#include <alogsets/errors.hpp>
#include <alogsets/evaluator.hpp>
#include <alogsets/ground.hpp>
#include <alogsets/grounder.hpp>
#include <alogsets/model.hpp>
#include <alogsets/parser.hpp>
#include <alogsets/random_program.hpp>
#include <alogsets/slog_plus.hpp>
#include <alogsets/solver.hpp>
#include <alogsets/splitting.hpp>
#include <alogsets/term.hpp>
#include <alogsets/universe.hpp>
