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

#include "tristream/errors.hpp"

namespace tristream {

namespace {

const char* Describe(InvalidEdge::Kind kind) {
  switch (kind) {
    case InvalidEdge::Kind::kSelfLoop: return "self-loop";
    case InvalidEdge::Kind::kDuplicateEdge: return "duplicate edge";
    case InvalidEdge::Kind::kOutOfRange: return "endpoint out of range";
  }
  return "invalid edge";
}

const char* Describe(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kSelfLoop: return "self-loop";
    case ParseError::Kind::kDuplicateEdge: return "duplicate edge";
    case ParseError::Kind::kMalformed: return "malformed line";
  }
  return "parse error";
}

}  // namespace

InvalidProbability::InvalidProbability(double p)
    : InvalidArgs("probability " + std::to_string(p) + " outside [0, 1]") {}

PassBudgetExhausted::PassBudgetExhausted(int passes_allowed)
    : Error("pass budget of " + std::to_string(passes_allowed) +
            " exhausted") {}

InvalidEdge::InvalidEdge(Kind kind, std::size_t edge_index)
    : Error(std::string(Describe(kind)) + " at edge " +
            std::to_string(edge_index)),
      kind_(kind),
      edge_index_(edge_index) {}

ParseError::ParseError(Kind kind, std::size_t line, const std::string& detail)
    : Error(std::string(Describe(kind)) + " on line " + std::to_string(line) +
            (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

}  // namespace tristream
