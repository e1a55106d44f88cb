/*
   Copyright 2026 zetalab developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/* Base class for everything thrown by the library. */
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed input: bad rational syntax, unknown identity name, ... */
class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/* Mathematically out of domain: poles, divergent series, division by zero
 * in a quotient field, non-fundamental discriminants. */
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/* The requested guarantee cannot be met at the given precision; carries an
 * estimate of the precision that would suffice. */
class PrecisionError : public Error {
  public:
    PrecisionError(const std::string& what, long required_bits)
        : Error(what), required_bits_(required_bits) {}
    long required_bits() const { return required_bits_; }

  private:
    long required_bits_;
};

}  // namespace zetalab
