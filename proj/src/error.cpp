// Copyright 2026 The mdsarray Authors
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

#include "mdsarray/error.hpp"

namespace mdsarray {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::FieldExhausted: return "FieldExhausted";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DuplicateLambda: return "DuplicateLambda";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidAvoidSet: return "InvalidAvoidSet";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::TooManyErasures: return "TooManyErasures";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NodeDown: return "NodeDown";
    case ErrorKind::TwoFailures: return "TwoFailures";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace mdsarray
