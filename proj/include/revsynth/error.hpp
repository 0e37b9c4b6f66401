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

#pragma once

#include <stdexcept>
#include <string>

namespace revsynth {

/// Broad failure classes. The CLI maps these onto process exit codes.
enum class ErrorCategory {
  InvalidInput,      // malformed text, out-of-range index, width mismatch
  Unsynthesizable,   // precondition of a synthesis method not met
  ResourceLimit,     // memory budget, time limit or search ceiling hit
  DataCorruption,    // library file damaged or inconsistent
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorCategory::InvalidInput, what) {}
};

class Unsynthesizable : public Error {
 public:
  explicit Unsynthesizable(const std::string& what)
      : Error(ErrorCategory::Unsynthesizable, what) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorCategory::ResourceLimit, what) {}
};

class DataCorruption : public Error {
 public:
  explicit DataCorruption(const std::string& what)
      : Error(ErrorCategory::DataCorruption, what) {}
};

const char* category_name(ErrorCategory category) noexcept;

}  // namespace revsynth
