// Copyright 2026 The Authors.
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

#include "msca/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "msca/errors.hpp"

namespace msca {

ExactResult exact_optimum(const ProblemInstance& inst) {
  const int n = inst.n(), k = inst.k();
  std::vector<int> free_elems;
  Partition p;
  p.label.assign(n, -1);
  p.k = k;
  for (int v = 0; v < n; ++v) {
    const int pin = inst.pinned_label(v);
    if (pin >= 0) {
      p.label[v] = pin;
    } else {
      free_elems.push_back(v);
    }
  }
  const double combos = std::pow(static_cast<double>(k), static_cast<double>(free_elems.size()));
  if (combos > 2e7) {
    throw TooLargeError("exact_optimum: label space exceeds the enumeration budget");
  }

  // Allowed labels per free element, ascending, so that advancing the
  // odometer below walks full label vectors in lexicographic order.
  std::vector<std::vector<int>> allowed(free_elems.size());
  for (std::size_t d = 0; d < free_elems.size(); ++d) {
    for (int i = 0; i < k; ++i) {
      if (!inst.is_forbidden(free_elems[d], i)) allowed[d].push_back(i);
    }
    if (allowed[d].empty()) {
      throw InfeasibleError("exact_optimum: element with every label forbidden");
    }
  }

  ExactResult best;
  best.cost = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> digit(free_elems.size(), 0);
  for (;;) {
    for (std::size_t d = 0; d < free_elems.size(); ++d) {
      p.label[free_elems[d]] = allowed[d][digit[d]];
    }
    const double c = inst.cost(p);
    if (c < best.cost) {
      best.cost = c;
      best.partition = p;
    }
    // Advance the least significant digit (the last free element), so
    // earlier elements change slowest.
    std::size_t d = free_elems.size();
    while (d > 0) {
      --d;
      if (++digit[d] < allowed[d].size()) break;
      digit[d] = 0;
      if (d == 0) return best;
    }
    if (free_elems.empty()) return best;
  }
}

double lovasz_eval_reference(const SubmodularOracle& f, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  if (n != f.n()) throw std::invalid_argument("lovasz_eval_reference: size mismatch");
  std::vector<double> clamped(x);
  for (double& v : clamped) v = std::clamp(v, 0.0, 1.0);

  std::vector<double> points(clamped);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  double integral = 0.0;
  double prev = 0.0;
  for (double t : points) {
    if (t <= 0.0) continue;
    Subset level = Subset::empty_set(n);
    for (int v = 0; v < n; ++v) {
      if (clamped[v] >= t) level.insert(v);
    }
    integral += (t - prev) * f(level);
    prev = t;
  }
  if (prev < 1.0) integral += (1.0 - prev) * f(Subset::empty_set(n));
  return integral;
}

MinSubsetResult brute_min_subset(const SubmodularOracle& f) {
  return brute_min_subset(f, Subset::empty_set(f.n()), Subset::empty_set(f.n()));
}

MinSubsetResult brute_min_subset(const SubmodularOracle& f, const Subset& must_contain,
                                 const Subset& must_avoid) {
  const int n = f.n();
  if (n > 22) throw TooLargeError("brute_min_subset: ground set exceeds 22 elements");
  if (must_contain.intersects(must_avoid)) {
    throw std::invalid_argument("brute_min_subset: contradictory constraints");
  }
  std::vector<int> free_bits;
  for (int v = 0; v < n; ++v) {
    if (!must_contain.contains(v) && !must_avoid.contains(v)) free_bits.push_back(v);
  }
  const std::uint64_t base = must_contain.mask();
  MinSubsetResult best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint64_t limit = std::uint64_t{1} << free_bits.size();
  for (std::uint64_t c = 0; c < limit; ++c) {
    std::uint64_t mask = base;
    for (std::size_t j = 0; j < free_bits.size(); ++j) {
      if ((c >> j) & 1u) mask |= std::uint64_t{1} << free_bits[j];
    }
    const Subset s = Subset::from_mask(n, mask);
    const double value = f(s);
    if (value < best.value) {
      best.value = value;
      best.set = s;
    }
  }
  return best;
}

Estimate estimate(const std::function<double(Rng&)>& statistic, int trials, std::uint64_t seed) {
  if (trials < 100) throw std::invalid_argument("estimate: needs at least 100 trials");
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t));
    const double v = statistic(rng);
    sum += v;
    sum_sq += v * v;
  }
  Estimate e;
  e.trials = trials;
  e.mean = sum / trials;
  const double var = std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1));
  e.std_error = std::sqrt(var / trials);
  return e;
}

}  // namespace msca
