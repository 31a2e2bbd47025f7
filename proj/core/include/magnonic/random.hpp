// Copyright 2026 The magnonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGNONIC_RANDOM_HPP
#define MAGNONIC_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace magnonic {

/// Standard normal deviates with a fixed, portable recipe.
///
/// std::normal_distribution is implementation-defined, so CSV output would
/// differ between standard libraries. This source draws 53-bit uniforms
/// u = ((x >> 11) + 0.5) / 2^53 from std::mt19937_64 and applies the
/// Box-Muller transform, emitting both deviates of each pair in order.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double next();

    /// Independent standard normals in the real and imaginary parts.
    std::complex<double> next_complex();

  private:
    double uniform_open();

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace magnonic

#endif  // MAGNONIC_RANDOM_HPP
