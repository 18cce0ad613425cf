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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tristream {

using VertexId = std::uint32_t;

// Undirected edge. The endpoint order is the order in which the edge was
// listed; equality treats (u, v) and (v, u) as the same edge.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
  }
};

// 64-bit key identifying the unordered pair {u, v}.
inline std::uint64_t EdgeKey(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}
inline std::uint64_t EdgeKey(const Edge& e) { return EdgeKey(e.u, e.v); }

// Immutable simple undirected graph with a CSR adjacency index whose
// neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Validates and indexes `edges`. Throws InvalidEdge on a self-loop, a
  // repeated unordered pair, or an endpoint >= num_vertices.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  // Like the constructor, with the vertex count inferred as max id + 1.
  static Graph FromEdges(std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  bool HasEdge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<VertexId> adjacency_;
};

// Reads the "u v" per line text format. Blank lines and lines starting with
// '#' are skipped. The vertex count is 1 + the largest id, or
// `num_vertices` when given (it must cover every listed id).
Graph ParseEdgeList(std::string_view text,
                    std::optional<std::size_t> num_vertices = std::nullopt);

// Inverse of ParseEdgeList: one "u v\n" line per edge, in edge order.
// Isolated trailing vertices are not representable in the text.
std::string SerializeEdgeList(const Graph& g);

Graph ReadEdgeListFile(const std::string& path,
                       std::optional<std::size_t> num_vertices = std::nullopt);
void WriteEdgeListFile(const Graph& g, const std::string& path);

}  // namespace tristream
