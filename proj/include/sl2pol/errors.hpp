// Copyright 2026 The sl2pol Authors
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

#ifndef SL2POL_ERRORS_HPP
#define SL2POL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl2pol {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(const std::string& what) : Error(what) {}
};

class NotTimelike : public Error {
 public:
  explicit NotTimelike(const std::string& what) : Error(what) {}
};

class NotSpacelike : public Error {
 public:
  explicit NotSpacelike(const std::string& what) : Error(what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what) : Error(what) {}
};

class TooFewSamples : public Error {
 public:
  explicit TooFewSamples(const std::string& what) : Error(what) {}
};

class Unphysical : public Error {
 public:
  explicit Unphysical(const std::string& what) : Error(what) {}
};

class ZeroIntensity : public Error {
 public:
  explicit ZeroIntensity(const std::string& what) : Error(what) {}
};

/// Raised when the 2x2 -> 4x4 map produces a matrix with an imaginary
/// residue above threshold.  Signals an implementation fault, not bad input.
class NonRealResult : public Error {
 public:
  explicit NonRealResult(const std::string& what) : Error(what) {}
};

/// Pipeline-text errors carry the offending line and token.
class ParseError : public Error {
 public:
  ParseError(int line, std::string token, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what +
              (token.empty() ? "" : " ('" + token + "')")),
        line_(line),
        token_(std::move(token)) {}

  int line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  std::string token_;
};

class UnknownKind : public ParseError {
 public:
  UnknownKind(int line, const std::string& token)
      : ParseError(line, token, "unknown element kind") {}
};

class BadArity : public ParseError {
 public:
  BadArity(int line, const std::string& token, const std::string& what)
      : ParseError(line, token, what) {}
};

}  // namespace sl2pol

#endif  // SL2POL_ERRORS_HPP
