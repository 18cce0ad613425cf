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

#include <cstdint>
#include <random>

namespace tristream {

// All randomness in the library flows through std::mt19937_64, whose output
// sequence is fixed by the standard. The helpers below avoid the standard
// distributions, whose algorithms are implementation-defined, so that seeded
// runs are reproducible across toolchains.
using Rng = std::mt19937_64;

// One step of the SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed for the `index`-th child of `master`: the index-th output of a
// SplitMix64 generator started at `master`. Pure function of its inputs.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

// Uniform double in [0, 1) built from the top 53 bits of one draw.
double UniformUnit(Rng& rng);

// Uniform integer in [0, bound). `bound` must be positive.
std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound);

}  // namespace tristream
