// Copyright 2026 The tristream Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tristream {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by a caller-supplied argument.
class InvalidArgs : public Error {
 public:
  using Error::Error;
};

class InvalidProbability : public InvalidArgs {
 public:
  explicit InvalidProbability(double p);
};

// Detector configuration rejected before any edge is read.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class PassBudgetExhausted : public Error {
 public:
  explicit PassBudgetExhausted(int passes_allowed);
};

// An edge list that does not describe a simple undirected graph.
class InvalidEdge : public Error {
 public:
  enum class Kind { kSelfLoop, kDuplicateEdge, kOutOfRange };

  InvalidEdge(Kind kind, std::size_t edge_index);

  Kind kind() const { return kind_; }
  // Zero-based position of the offending edge in the input sequence.
  std::size_t edge_index() const { return edge_index_; }

 private:
  Kind kind_;
  std::size_t edge_index_;
};

// Text-level failure while reading an edge list. Lines are 1-based.
class ParseError : public Error {
 public:
  enum class Kind { kSelfLoop, kDuplicateEdge, kMalformed };

  ParseError(Kind kind, std::size_t line, const std::string& detail = "");

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace tristream
