// Copyright 2026 The hopfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

/// Base class for every error thrown by the toolkit. Failed verification
/// checks are never reported through exceptions; they come back as reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor legs or map shapes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed caller input (bad permutation, non-group table, bad schema...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is unavailable for this input, e.g. a singular
/// antipode or roots of unity missing from the active field.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Sweedler expression or file parse failure, with a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at " + std::to_string(line) + ":" +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A file could not be read or written.
class IoError : public InputError {
 public:
  using InputError::InputError;
};

/// A definition file parsed but does not match its schema. `field()` is the
/// offending key, e.g. "mult".
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& field, const std::string& message)
      : InputError("field '" + field + "': " + message), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Expression evaluation failure (unbound cocycle, dimension mismatch).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Something that should be impossible for valid inputs happened anyway.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfkit
