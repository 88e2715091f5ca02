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

#include "xmodloop/error.h"

namespace xmod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyGroup: return "EmptyGroup";
    case ErrorKind::kDuplicateElement: return "DuplicateElement";
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNoInverse: return "NoInverse";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kNotSubgroup: return "NotSubgroup";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kNotHomomorphism: return "NotHomomorphism";
    case ErrorKind::kInvalidAction: return "InvalidAction";
    case ErrorKind::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::kSpaceNotAbelian: return "SpaceNotAbelian";
    case ErrorKind::kCM1Violation: return "CM1Violation";
    case ErrorKind::kCM2Violation: return "CM2Violation";
    case ErrorKind::kInternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorKind::kInvalidGroupoid: return "InvalidGroupoid";
    case ErrorKind::kUnknownObject: return "UnknownObject";
    case ErrorKind::kInvalidGroupoidXMod: return "InvalidGroupoidXMod";
    case ErrorKind::kInvalidMorphism: return "InvalidMorphism";
    case ErrorKind::kCodomainViolation: return "CodomainViolation";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kCountMismatch: return "CountMismatch";
    case ErrorKind::kExactnessFailure: return "ExactnessFailure";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kIsomorphismNotFound: return "IsomorphismNotFound";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::kSchemaError: return "SchemaError";
    case ErrorKind::kUsage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
      kind_(kind),
      witness_(witness) {}

void throw_if_any(const Report& report) {
  if (!report.empty()) throw Error(report.front().kind, report.front().witness);
}

std::string format_report(const Report& report) {
  std::string out;
  for (const Violation& v : report) {
    out += to_string(v.kind);
    out += ": ";
    out += v.witness;
    out += '\n';
  }
  return out;
}

}  // namespace xmod
