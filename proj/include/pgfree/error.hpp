// Copyright 2026 The Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgfree {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument is outside the documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A check was invoked on an input outside its hypotheses. The message
/// names the failing hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A proven inequality or identity failed to hold. For correct code this
/// is unreachable; sweeps catch it and record the offending set.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// epsilon was smaller than the least epsilon for which the set is uniform.
class NotUniformError : public Error {
 public:
  NotUniformError(const std::string& what, std::uint32_t worst_gamma)
      : Error(what), worst_gamma_(worst_gamma) {}
  std::uint32_t worst_gamma() const noexcept { return worst_gamma_; }

 private:
  std::uint32_t worst_gamma_;
};

/// A rank cap or a search work budget was exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `position` is a byte offset or an element
/// index, depending on `where`.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what) {}
};

}  // namespace pgfree
