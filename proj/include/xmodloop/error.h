// Copyright 2026 The xmodloop Authors
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

#ifndef XMODLOOP_ERROR_H_
#define XMODLOOP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xmod {

enum class ErrorKind {
  kEmptyGroup,
  kDuplicateElement,
  kNotClosed,
  kNotAssociative,
  kNoIdentity,
  kNoInverse,
  kUnknownElement,
  kNotSubgroup,
  kNotNormal,
  kNotHomomorphism,
  kInvalidAction,
  kSizeLimitExceeded,
  kSpaceNotAbelian,
  kCM1Violation,
  kCM2Violation,
  kInternalInvariantBroken,
  kInvalidGroupoid,
  kUnknownObject,
  kInvalidGroupoidXMod,
  kInvalidMorphism,
  kCodomainViolation,
  kIndexOutOfRange,
  kCountMismatch,
  kExactnessFailure,
  kPreconditionFailed,
  kIsomorphismNotFound,
  kSyntaxError,
  kUnknownIdentifier,
  kSchemaError,
  kUsage,
};

std::string_view to_string(ErrorKind kind);

// Every error carries the elements that witness it in its message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& witness);

  ErrorKind kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

struct Violation {
  ErrorKind kind;
  std::string witness;

  bool operator==(const Violation&) const = default;
};

// Empty iff the checked structure is valid.
using Report = std::vector<Violation>;

// Throws the first violation of a non-empty report.
void throw_if_any(const Report& report);

std::string format_report(const Report& report);

}  // namespace xmod

#endif  // XMODLOOP_ERROR_H_
