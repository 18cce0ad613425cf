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

#include "tristream/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tristream/errors.hpp"
#include "tristream/random.hpp"

namespace tristream {

namespace {

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability(p);
}

VertexId Id(std::uint64_t v) {
  if (v > 0xffffffffULL) throw InvalidArgs("vertex id exceeds 2^32 - 1");
  return static_cast<VertexId>(v);
}

}  // namespace

BitVector::BitVector(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidArgs("bit vector must be non-empty");
}

BitVector BitVector::FromString(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgs("bit string may contain only '0' and '1'");
    }
    bits.push_back(c == '1');
  }
  return BitVector(std::move(bits));
}

BitVector BitVector::Random(std::size_t length, std::size_t ones,
                            std::uint64_t seed) {
  if (ones > length) throw InvalidArgs("more ones than bits");
  std::vector<std::size_t> slots(length);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  Rng rng(seed);
  std::vector<bool> bits(length, false);
  for (std::size_t i = 0; i < ones; ++i) {
    std::swap(slots[i], slots[i + UniformBelow(rng, length - i)]);
    bits[slots[i]] = true;
  }
  return BitVector(std::move(bits));
}

bool BitVector::at(std::size_t index) const {
  if (index < 1 || index > bits_.size()) {
    throw InvalidArgs("bit index " + std::to_string(index) +
                      " outside [1, " + std::to_string(bits_.size()) + "]");
  }
  return bits_[index - 1];
}

std::size_t BitVector::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string BitVector::ToString() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Graph GenerateTower(std::uint64_t s, std::uint64_t pad_edges) {
  if (s < 1) throw InvalidArgs("a tower needs at least one triangle");
  const std::uint64_t n = s + 2 + 2 * pad_edges;
  std::vector<Edge> edges;
  edges.reserve(2 * s + 1 + pad_edges);
  edges.push_back({0, 1});
  for (std::uint64_t apex = 2; apex < s + 2; ++apex) {
    edges.push_back({0, Id(apex)});
    edges.push_back({1, Id(apex)});
  }
  for (std::uint64_t v = s + 2; v < n; v += 2) {
    edges.push_back({Id(v), Id(v + 1)});
  }
  return Graph(n, std::move(edges));
}

Graph GenerateDisjointTriangles(std::uint64_t T) {
  if (T < 1) throw InvalidArgs("need at least one triangle");
  std::vector<Edge> edges;
  edges.reserve(3 * T);
  for (std::uint64_t i = 0; i < T; ++i) {
    const VertexId a = Id(3 * i);
    edges.push_back({a, a + 1});
    edges.push_back({a + 1, a + 2});
    edges.push_back({a + 2, a});
  }
  return Graph(3 * T, std::move(edges));
}

Graph GenerateDoubleBipartite(std::uint64_t k) {
  std::vector<Edge> edges;
  edges.reserve(2 * k * k);
  for (std::uint64_t mid = k; mid < 2 * k; ++mid) {
    for (std::uint64_t left = 0; left < k; ++left) {
      edges.push_back({Id(left), Id(mid)});
    }
    for (std::uint64_t right = 2 * k; right < 3 * k; ++right) {
      edges.push_back({Id(mid), Id(right)});
    }
  }
  return Graph(3 * k, std::move(edges));
}

Graph GenerateIndexGadget(const BitVector& x, std::uint64_t f, std::uint64_t ell,
                          std::uint64_t T) {
  if (f < 1 || x.size() % f != 0) {
    throw InvalidArgs("bit vector length must be a multiple of f");
  }
  if (ell < 1 || ell > x.size()) throw InvalidArgs("index ell out of range");
  if (T < 1) throw InvalidArgs("T must be >= 1");

  const std::uint64_t a = x.size() / f;
  const std::uint64_t y0 = a;
  const std::uint64_t z0 = a + f;
  std::vector<Edge> edges;
  edges.reserve(x.count() + 2 * T);
  for (std::uint64_t k = 1; k <= x.size(); ++k) {
    if (!x.at(k)) continue;
    const std::uint64_t i = (k - 1) / f;
    const std::uint64_t j = (k - 1) % f;
    edges.push_back({Id(i), Id(y0 + j)});
  }
  const VertexId xi = Id((ell - 1) / f);
  const VertexId yj = Id(y0 + (ell - 1) % f);
  for (std::uint64_t r = 0; r < T; ++r) {
    edges.push_back({Id(z0 + r), xi});
    edges.push_back({Id(z0 + r), yj});
  }
  return Graph(z0 + T, std::move(edges));
}

Graph GenerateDisjointnessGadget(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw InvalidArgs("x and y lengths differ");
  const auto n = static_cast<std::uint64_t>(
      std::llround(std::sqrt(static_cast<double>(x.size()))));
  if (n * n != x.size()) {
    throw InvalidArgs("bit vector length must be a perfect square");
  }
  const std::uint64_t b0 = n;
  const std::uint64_t c0 = 2 * n;
  std::vector<Edge> edges;
  edges.reserve(n + x.count() + y.count());
  for (std::uint64_t i = 0; i < n; ++i) edges.push_back({Id(i), Id(c0 + i)});
  for (std::uint64_t k = 1; k <= x.size(); ++k) {
    if (x.at(k)) edges.push_back({Id((k - 1) / n), Id(b0 + (k - 1) % n)});
  }
  for (std::uint64_t k = 1; k <= y.size(); ++k) {
    if (y.at(k)) edges.push_back({Id(c0 + (k - 1) / n), Id(b0 + (k - 1) % n)});
  }
  return Graph(3 * n, std::move(edges));
}

Graph GenerateRandom(std::uint64_t n, double edge_prob, std::uint64_t seed) {
  CheckProbability(edge_prob);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      if (UniformUnit(rng) < edge_prob) edges.push_back({Id(u), Id(v)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph GenerateRandomBipartite(std::uint64_t left, std::uint64_t right,
                              double edge_prob, std::uint64_t seed) {
  CheckProbability(edge_prob);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u < left; ++u) {
    for (std::uint64_t v = left; v < left + right; ++v) {
      if (UniformUnit(rng) < edge_prob) edges.push_back({Id(u), Id(v)});
    }
  }
  return Graph(left + right, std::move(edges));
}

}  // namespace tristream
