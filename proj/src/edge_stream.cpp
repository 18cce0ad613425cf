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

#include "tristream/edge_stream.hpp"

#include <utility>

#include "tristream/errors.hpp"
#include "tristream/random.hpp"

namespace tristream {

EdgeStream::EdgeStream(const Graph& graph, int passes,
                       std::optional<std::uint64_t> shuffle_seed)
    : num_vertices_(graph.num_vertices()),
      order_(graph.edges()),
      passes_allowed_(passes) {
  if (passes < 1) throw InvalidArgs("a stream needs at least one pass");
  if (shuffle_seed) {
    shuffled_.assign(graph.edges().begin(), graph.edges().end());
    Rng rng(*shuffle_seed);
    for (std::size_t i = shuffled_.size(); i > 1; --i) {
      std::swap(shuffled_[i - 1], shuffled_[UniformBelow(rng, i)]);
    }
    order_ = shuffled_;
  }
}

EdgeStream::Pass EdgeStream::NextPass() {
  if (passes_consumed_ >= passes_allowed_) {
    throw PassBudgetExhausted(passes_allowed_);
  }
  ++passes_consumed_;
  cursor_ = 0;
  return Pass(this);
}

}  // namespace tristream
