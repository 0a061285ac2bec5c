// Copyright 2026 The mgdiscord Authors
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

#include "mgd/simplex.hpp"

#include <algorithm>
#include <numeric>

#include "mgd/errors.hpp"

namespace mgd {

SimplexResult nelder_mead(const Objective &f, std::vector<double> start,
                          const SimplexOptions &options) {
  const std::size_t n = start.size();
  if (n == 0) throw ParameterError("nelder_mead: empty parameter vector");
  if (options.max_iterations < 0 || !(options.tolerance > 0.0) || !(options.initial_step > 0.0)) {
    throw ParameterError("nelder_mead: invalid options");
  }
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / dn;
  const double gamma = 0.75 - 0.5 / dn;
  const double delta = 1.0 - 1.0 / dn;

  SimplexResult result;
  auto eval = [&](const std::vector<double> &x) {
    ++result.evaluations;
    return f(std::span<const double>(x));
  };

  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += options.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  // order[0] is the best vertex, order[n] the worst.
  std::vector<std::size_t> order(n + 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto sort_simplex = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  std::vector<double> centroid(n), trial(n), trial2(n);

  sort_simplex();
  while (result.iterations < options.max_iterations) {
    const std::size_t best = order[0], worst = order[n];
    if (vals[worst] - vals[best] < options.tolerance) {
      result.converged = true;
      break;
    }
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::vector<double> &p = pts[order[i]];
      for (std::size_t k = 0; k < n; ++k) centroid[k] += p[k];
    }
    for (double &c : centroid) c /= dn;

    auto along = [&](double coef, std::vector<double> &out) {
      const std::vector<double> &w = pts[worst];
      for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + coef * (w[k] - centroid[k]);
    };

    along(-alpha, trial);
    const double fr = eval(trial);
    if (fr < vals[best]) {
      along(-alpha * beta, trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[worst].swap(trial2);
        vals[worst] = fe;
      } else {
        pts[worst].swap(trial);
        vals[worst] = fr;
      }
    } else if (fr < vals[order[n - 1]]) {
      pts[worst].swap(trial);
      vals[worst] = fr;
    } else {
      const bool outside = fr < vals[worst];
      along(outside ? -alpha * gamma : gamma, trial2);
      const double fc = eval(trial2);
      if (fc < std::min(fr, vals[worst])) {
        pts[worst].swap(trial2);
        vals[worst] = fc;
      } else {
        const std::vector<double> &b = pts[best];
        for (std::size_t i = 1; i <= n; ++i) {
          std::vector<double> &p = pts[order[i]];
          for (std::size_t k = 0; k < n; ++k) p[k] = b[k] + delta * (p[k] - b[k]);
          vals[order[i]] = eval(p);
        }
      }
    }
    sort_simplex();
    result.best_history.push_back(vals[order[0]]);
  }
  if (!result.converged && vals[order[n]] - vals[order[0]] < options.tolerance) result.converged = true;

  result.x = pts[order[0]];
  result.value = vals[order[0]];
  return result;
}

}  // namespace mgd
