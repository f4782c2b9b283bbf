// Copyright 2026 The SemJudge Authors.
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

#include "semjudge/error.h"

namespace semjudge {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kSideMismatch: return "side-mismatch";
    case ErrorCode::kInvalidHsg: return "invalid-hsg";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kData: return "data";
    case ErrorCode::kUndefined: return "undefined";
    case ErrorCode::kTransport: return "transport";
    case ErrorCode::kRepairExhausted: return "repair-exhausted";
  }
  return "unknown";
}

}  // namespace semjudge
