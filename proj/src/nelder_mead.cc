// Copyright 2026 The qgame Authors
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

#include "qgame/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgame {
namespace {

using Point = std::vector<double>;

Point Affine(const Point& from, const Point& to, double t) {
  Point out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    out[i] = from[i] + t * (to[i] - from[i]);
  }
  return out;
}

}  // namespace

NelderMeadResult NelderMeadMinimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> start, double step,
    const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  std::vector<Point> simplex(n + 1, Point(start.begin(), start.end()));
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = objective(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult result;
  for (result.iterations = 0;; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return values[a] < values[b];
    });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double spread = values[worst] - values[best];
    double size = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        size = std::max(size, std::abs(simplex[i][k] - simplex[best][k]));
      }
    }
    if (spread <= options.value_tolerance && size <= options.point_tolerance) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iterations) break;

    Point centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / n;
    }

    const Point reflected = Affine(centroid, simplex[worst], -1.0);
    const double f_reflected = objective(reflected);
    if (f_reflected < values[best]) {
      const Point expanded = Affine(centroid, simplex[worst], -2.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < values[worst];
    const Point contracted =
        outside ? Affine(centroid, reflected, 0.5)
                : Affine(centroid, simplex[worst], 0.5);
    const double f_contracted = objective(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = Affine(simplex[best], simplex[i], 0.5);
      values[i] = objective(simplex[i]);
    }
  }

  const std::size_t best = order.front();
  result.point = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace qgame
