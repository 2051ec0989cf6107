// Copyright 2026 The MutualSpace Authors
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

#ifndef MUTUALSPACE_ERRORS_H_
#define MUTUALSPACE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mutualspace {

// Raised when an input (polygon, scene file, parameter block) violates its
// contract. The message names the offending room/object/parameter.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace mutualspace

#endif  // MUTUALSPACE_ERRORS_H_
