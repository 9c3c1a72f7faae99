// Copyright 2026 The inlc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INLC_ERRORS_H_
#define INLC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inlc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-open character range [start, end) into parser input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(message + " at offset " + std::to_string(span.start)),
        span_(span),
        detail_(message) {}

  SourceSpan span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceSpan span_;
  std::string detail_;
};

class UnknownWorld : public Error {
 public:
  using Error::Error;
};

// Free variable without a value, or a value of the wrong sort.
class EvalError : public Error {
 public:
  using Error::Error;
};

class SortMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedDecomposition : public Error {
 public:
  using Error::Error;
};

class NotSahlqvistError : public Error {
 public:
  using Error::Error;
};

// An invariant that should hold by construction failed at runtime.
class InternalError : public Error {
 public:
  using Error::Error;
};

class FrameFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace inlc

#endif  // INLC_ERRORS_H_
