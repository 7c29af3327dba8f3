/*
   Copyright 2026 The cyclicid Authors

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

#ifndef CYCLICID_ERRORS_HPP
#define CYCLICID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclicid {

// Root of everything the library throws.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain: zero divisor, gcd(0,0), no order, bad offset.
class DomainError : public Error {
   public:
    using Error::Error;
};

class InvalidGenerator : public Error {
   public:
    using Error::Error;
};

// An enumeration or dense table would exceed a size guard.
class ResourceError : public Error {
   public:
    using Error::Error;
};

// The question does not make sense for this object (trivial codes, trivial f).
class NotApplicable : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

// Probability masses that do not sum to one, malformed stream files.
class CorruptInput : public Error {
   public:
    using Error::Error;
};

}  // namespace cyclicid

#endif
