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

#include "tristream/detectors.hpp"

namespace tristream {

bool SampledSubgraph::Add(const Edge& e) {
  if (!keys_.insert(EdgeKey(e)).second) return false;
  adjacency_[e.u].push_back(e.v);
  adjacency_[e.v].push_back(e.u);
  edges_.push_back(e);
  return true;
}

bool SampledSubgraph::CompletesTriangle(const Edge& e) const {
  const auto iu = adjacency_.find(e.u);
  const auto iv = adjacency_.find(e.v);
  if (iu == adjacency_.end() || iv == adjacency_.end()) return false;

  VertexId other = e.v;
  const std::vector<VertexId>* scan = &iu->second;
  if (iv->second.size() < scan->size()) {
    scan = &iv->second;
    other = e.u;
  }
  for (VertexId w : *scan) {
    if (w != other && keys_.contains(EdgeKey(other, w))) return true;
  }
  return false;
}

bool SampledSubgraph::ContainsTriangle() const {
  for (const Edge& e : edges_) {
    if (CompletesTriangle(e)) return true;
  }
  return false;
}

}  // namespace tristream
