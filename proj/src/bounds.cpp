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

#include <algorithm>
#include <cmath>

#include "tristream/errors.hpp"
#include "tristream/oracle.hpp"

namespace tristream {

namespace {
double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }
}  // namespace

double ChernoffPhi(double x) {
  if (x < -1.0) throw InvalidArgs("phi is undefined below -1");
  if (x == -1.0) return 1.0;
  return (1.0 + x) * std::log1p(x) - x;
}

double ChernoffTail(double mu, double t, TailSide side) {
  if (!(mu > 0.0)) throw InvalidArgs("tail bound needs mu > 0");
  if (!(t >= 0.0)) throw InvalidArgs("tail bound needs t >= 0");
  if (side == TailSide::kLower && t > mu) {
    throw InvalidArgs("lower tail bound needs t <= mu");
  }
  const double x = side == TailSide::kUpper ? t / mu : -t / mu;
  return Clamp01(std::exp(-mu * ChernoffPhi(x)));
}

double ChebyshevZeroBound(double mu, double sigma) {
  if (!(mu > 0.0)) throw InvalidArgs("zero bound needs mu > 0");
  if (!(sigma >= 0.0)) throw InvalidArgs("zero bound needs sigma >= 0");
  const double ratio = sigma / mu;
  return Clamp01(ratio * ratio);
}

}  // namespace tristream
