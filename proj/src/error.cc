/*
 * Copyright 2026 The latticelab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "latticelab/error.h"

namespace latticelab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kParamMismatch: return "ParamMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonSquarefree: return "NonSquarefree";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kNTooSmall: return "NTooSmall";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kRejectionOverflow: return "RejectionOverflow";
    case ErrorCode::kChainOverflow: return "ChainOverflow";
    case ErrorCode::kDecryptFail: return "DecryptFail";
    case ErrorCode::kLevelExceeded: return "LevelExceeded";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace latticelab
