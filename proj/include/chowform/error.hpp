// Copyright 2026 The chowform Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace chowform {

/// Outcome classes shared by the library and the command-line front end.
enum class Status {
  ok,
  precondition_failed,
  degenerate_input,
  inapplicable,
};

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::precondition_failed:
      return "precondition-failed";
    case Status::degenerate_input:
      return "degenerate-input";
    case Status::inapplicable:
      return "inapplicable";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

/// Malformed input or a violated operation precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(Status::precondition_failed, what) {}
};

/// Random sampling could not produce a generic instance within the retry
/// budget.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what)
      : Error(Status::degenerate_input, what) {}
};

/// The requested construction does not apply to this input (e.g. the
/// incidence locus is not a hypersurface).
class InapplicableError : public Error {
 public:
  explicit InapplicableError(const std::string& what)
      : Error(Status::inapplicable, what) {}
};

/// A variety-only criterion was asked of cycle-level data.
class CycleTagError : public InapplicableError {
 public:
  explicit CycleTagError(const std::string& what) : InapplicableError(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

}  // namespace detail
}  // namespace chowform
