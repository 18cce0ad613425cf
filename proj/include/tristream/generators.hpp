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
#include <string>
#include <string_view>
#include <vector>

#include "tristream/graph.hpp"

namespace tristream {

// Non-empty bit string with 1-based indexing.
class BitVector {
 public:
  // Throws InvalidArgs on an empty vector.
  explicit BitVector(std::vector<bool> bits);

  // Parses a string of '0' and '1' characters.
  static BitVector FromString(std::string_view text);
  // `length` bits with exactly `ones` ones at seeded uniform positions.
  static BitVector Random(std::size_t length, std::size_t ones,
                          std::uint64_t seed);

  std::size_t size() const { return bits_.size(); }
  // Bit at 1-based `index`; throws InvalidArgs when out of [1, size()].
  bool at(std::size_t index) const;
  std::size_t count() const;
  std::string ToString() const;

 private:
  std::vector<bool> bits_;
};

// s triangles on the base edge (0, 1) with apexes 2..s+1, followed by
// `pad_edges` matching edges on fresh vertex pairs. Throws InvalidArgs if
// s < 1.
Graph GenerateTower(std::uint64_t s, std::uint64_t pad_edges = 0);

// T vertex-disjoint triangles {3i, 3i+1, 3i+2}. Throws InvalidArgs if T < 1.
Graph GenerateDisjointTriangles(std::uint64_t T);

// Parts A0, A1, A2 of k vertices each with A1 completely joined to both A0
// and A2. Triangle-free, 2k^2 edges.
Graph GenerateDoubleBipartite(std::uint64_t k);

// Index-problem gadget. Vertices: X = [0, a), Y = [a, a + f), Z = the next T,
// where a = |x| / f. Bit (i-1) f + j of x places edge (x_i, y_j). If bit
// `ell` addresses slot (x_i, y_j), every z_r is joined to x_i and y_j, so the
// graph has T triangles when x[ell] = 1 and none otherwise.
// Throws InvalidArgs if f does not divide |x|, ell is outside [1, |x|], or
// T < 1.
Graph GenerateIndexGadget(const BitVector& x, std::uint64_t f, std::uint64_t ell,
                          std::uint64_t T);

// Disjointness gadget on parts A, B, C of n vertices each (|x| = |y| = n^2):
// the matching (a_i, c_i), then (a_i, b_j) for each set bit (i-1) n + j of x,
// then (c_i, b_j) for each set bit of y. Triangle count = sum_i x_i y_i.
// Throws InvalidArgs if the lengths differ or are not a perfect square.
Graph GenerateDisjointnessGadget(const BitVector& x, const BitVector& y);

// Each of the n(n-1)/2 pairs is an edge independently with probability
// edge_prob, decided in lexicographic pair order from one seeded stream.
Graph GenerateRandom(std::uint64_t n, double edge_prob, std::uint64_t seed);

// Random bipartite graph between [0, left) and [left, left + right).
Graph GenerateRandomBipartite(std::uint64_t left, std::uint64_t right,
                              double edge_prob, std::uint64_t seed);

}  // namespace tristream
