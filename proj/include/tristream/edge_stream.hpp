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
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "tristream/graph.hpp"

namespace tristream {

// Sequential, pass-budgeted view over a graph's edges. Each pass visits every
// edge exactly once, in an order fixed when the stream is opened. The only
// way to read edges is through a Pass, whose iterator shares the stream's
// cursor: an edge cannot be revisited within a pass, and a pass cannot be
// reopened once it has started.
//
// Single consumer. The graph must outlive the stream.
class EdgeStream {
 public:
  class Pass;

  // `passes` must be >= 1. With a shuffle seed the order is a seeded
  // Fisher-Yates permutation of the input order; otherwise input order.
  EdgeStream(const Graph& graph, int passes,
             std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  EdgeStream(const EdgeStream&) = delete;
  EdgeStream& operator=(const EdgeStream&) = delete;

  // Starts the next pass. Throws PassBudgetExhausted when the budget is spent.
  // Starting a pass abandons whatever remains of the previous one.
  Pass NextPass();

  int passes_allowed() const { return passes_allowed_; }
  int passes_consumed() const { return passes_consumed_; }
  std::size_t num_edges() const { return order_.size(); }
  std::size_t num_vertices() const { return num_vertices_; }
  // Total edges handed out across all passes.
  std::uint64_t edges_delivered() const { return edges_delivered_; }
  std::span<const Edge> order() const { return order_; }

 private:
  std::size_t num_vertices_;
  std::vector<Edge> shuffled_;
  std::span<const Edge> order_;
  int passes_allowed_;
  int passes_consumed_ = 0;
  std::size_t cursor_ = 0;
  std::uint64_t edges_delivered_ = 0;
};

class EdgeStream::Pass {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Edge;
    using difference_type = std::ptrdiff_t;
    using pointer = const Edge*;
    using reference = const Edge&;

    iterator() = default;

    reference operator*() const { return stream_->order_[stream_->cursor_]; }
    pointer operator->() const { return &**this; }
    iterator& operator++() {
      ++stream_->cursor_;
      ++stream_->edges_delivered_;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done();
    }

   private:
    friend class Pass;
    explicit iterator(EdgeStream* stream) : stream_(stream) {}
    bool done() const { return stream_->cursor_ >= stream_->order_.size(); }
    EdgeStream* stream_ = nullptr;
  };

  iterator begin() const { return iterator(stream_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  friend class EdgeStream;
  explicit Pass(EdgeStream* stream) : stream_(stream) {}
  EdgeStream* stream_;
};

}  // namespace tristream
