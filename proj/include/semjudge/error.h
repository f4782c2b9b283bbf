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

#ifndef SEMJUDGE_ERROR_H_
#define SEMJUDGE_ERROR_H_

#include <stdexcept>
#include <string>

namespace semjudge {

// Failure categories. The CLI maps these onto its exit-code taxonomy.
enum class ErrorCode {
  kInvalidArgument,     // precondition violated by the caller
  kConfig,              // configuration or unreadable input path
  kSideMismatch,        // cascade stages on the wrong side
  kInvalidHsg,          // HSG fails structural validation
  kSchema,              // model output or input file does not match schema
  kData,                // dataset cross-validation failure
  kUndefined,           // statistic undefined on the given data
  kTransport,           // backend unreachable / HTTP failure
  kRepairExhausted,     // backend kept returning schema-violating output
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semjudge

#endif  // SEMJUDGE_ERROR_H_
