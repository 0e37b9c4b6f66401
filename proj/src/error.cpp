// Copyright 2026 The revsynth Authors
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


#include "revsynth/error.hpp"

namespace revsynth {

const char* category_name(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::InvalidInput: return "invalid-input";
    case ErrorCategory::Unsynthesizable: return "unsynthesizable";
    case ErrorCategory::ResourceLimit: return "resource-limit";
    case ErrorCategory::DataCorruption: return "data-corruption";
  }
  return "unknown";
}

}  // namespace revsynth
