// Copyright 2026 The homtree Authors
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

#ifndef HOMTREE_ERRORS_HPP
#define HOMTREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homtree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid graph data: loops, out-of-range indices, bad vertex sets.
class GraphError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (e.g. size parameter of a
// disconnected graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A size guard was exceeded (subset enumeration over too many vertices, etc).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. `location` is a 1-based line number for
// files and a 0-based character offset for inline strings.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t location)
      : Error(what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace homtree

#endif  // HOMTREE_ERRORS_HPP
