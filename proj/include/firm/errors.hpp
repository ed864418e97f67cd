/*
 * Copyright 2026 The firm-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FIRM_ERRORS_HPP
#define FIRM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace firm {

/// Malformed FASTA/FASTQ/index/config input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A logical address or a reference does not fit the device geometry.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two configurations disagreed on which bins a read selects.
class VerdictMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace firm

#endif  // FIRM_ERRORS_HPP
