// Copyright 2026 The besselpade Authors
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

#ifndef BESSELPADE_INTERPOLATE_HPP
#define BESSELPADE_INTERPOLATE_HPP

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "besselpade/polynomial.hpp"

namespace besselpade {

using SamplePoint = std::pair<Rational, Rational>;

/// The unique polynomial of degree < points.size() through every (x, y),
/// built from Newton divided differences.
inline Polynomial interpolate(std::span<const SamplePoint> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("interpolate: duplicated abscissa " + to_string(points[i].first));
      }
    }
  }
  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  // Horner over the Newton basis.
  Polynomial out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * Polynomial{-points[i].first, 1} + Polynomial::constant(diff[i]);
  }
  return out;
}

inline Polynomial interpolate(std::initializer_list<SamplePoint> points) {
  return interpolate(std::span<const SamplePoint>(points.begin(), points.size()));
}

}  // namespace besselpade

#endif  // BESSELPADE_INTERPOLATE_HPP
