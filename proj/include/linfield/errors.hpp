/*
   Copyright 2026 the linfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINFIELD_ERRORS_HPP
#define LINFIELD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linfield {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Construction of a rational function with a zero denominator.
class ZeroDenominatorError : public Error {
  public:
    using Error::Error;
};

/// Inversion of the zero element.
class ZeroInverseError : public Error {
  public:
    using Error::Error;
};

/// Composition whose denominator collapses to the zero function.
class UndefinedCompositionError : public Error {
  public:
    using Error::Error;
};

/// Evaluation at a point where a denominator vanishes.
class PoleError : public Error {
  public:
    using Error::Error;
};

/// Annihilator construction on a functionally dependent input set.
class DependentInputError : public Error {
  public:
    using Error::Error;
};

/// A coset/conjugation operation received eta = 0.
class ZeroEtaError : public Error {
  public:
    using Error::Error;
};

/// A structural verification was called with its premises violated.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Base of all expression-parsing errors; carries the source position.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position + 1) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
  public:
    using ParseError::ParseError;
};

class UnknownVariableError : public ParseError {
  public:
    using ParseError::ParseError;
};

class NonIntegerExponentError : public ParseError {
  public:
    using ParseError::ParseError;
};

}  // namespace linfield

#endif  // LINFIELD_ERRORS_HPP
