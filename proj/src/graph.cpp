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

#include "tristream/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "tristream/errors.hpp"

namespace tristream {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  std::vector<std::size_t> degree(num_vertices_ + 1, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw InvalidEdge(InvalidEdge::Kind::kSelfLoop, i);
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw InvalidEdge(InvalidEdge::Kind::kOutOfRange, i);
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(num_vertices_ + 1, 0);
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      // Locate the first edge that repeats an earlier pair so the error
      // points at the offending line.
      std::unordered_set<std::uint64_t> seen;
      seen.reserve(edges_.size());
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!seen.insert(EdgeKey(edges_[i])).second) {
          throw InvalidEdge(InvalidEdge::Kind::kDuplicateEdge, i);
        }
      }
    }
  }
}

Graph Graph::FromEdges(std::vector<Edge> edges) {
  std::size_t n = 0;
  for (const Edge& e : edges) {
    n = std::max<std::size_t>(n, std::size_t{std::max(e.u, e.v)} + 1);
  }
  return Graph(n, std::move(edges));
}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  if (u >= num_vertices_ || v >= num_vertices_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  // Edge order is part of a graph's identity; endpoint order is too, so that
  // serialization round-trips are byte-exact.
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (a.edges_[i].u != b.edges_[i].u || a.edges_[i].v != b.edges_[i].v) {
      return false;
    }
  }
  return true;
}

}  // namespace tristream
