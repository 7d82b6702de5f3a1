// Copyright 2026 The voxfrac Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace voxfrac {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input geometry has no usable extent (e.g. a zero-size bounding box).
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

/// The request would exceed the sizes this library is meant to handle.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The occupied set is empty, so counting and dimension are undefined.
class EmptySet : public Error {
 public:
  using Error::Error;
};

/// Too few usable samples for a regression.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Malformed binary container or byte stream.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Binary stream shorter (or longer) than its header promises.
class TruncatedFile : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Text-format error tied to a 1-based line (or CSV row) number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace voxfrac
