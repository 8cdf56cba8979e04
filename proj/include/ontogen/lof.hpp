#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

#include "ontogen/error.hpp"

namespace ontogen {

using Point = std::vector<double>;

// Local reachability densities are capped here so that duplicate points
// (zero reachability distance) keep finite ratios.
inline constexpr double kMaxDensity = 1e12;

inline double euclidean(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Local Outlier Factor for every point. The k-distance neighbourhood
// includes every point tied with the k-th nearest neighbour. A point whose
// k nearest neighbours all coincide with it scores exactly 1.
//
// `workers` > 1 spreads the distance matrix over threads; each entry is
// computed independently, so the result does not depend on the count.
inline std::vector<double> lof_scores(const std::vector<Point>& points, std::size_t k,
                                      unsigned workers = 1) {
  const std::size_t n = points.size();
  if (k < 1) throw Error("LOF needs k >= 1");
  if (n <= k) {
    throw Error("LOF needs more than k points (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw Error("LOF points must share one dimension");
  }

  std::vector<double> dist(n * n, 0.0);
  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) dist[i * n + j] = euclidean(points[i], points[j]);
      }
    }
  };
  if (workers <= 1 || n < 64) {
    fill_rows(0, n);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(fill_rows, b, std::min(n, b + chunk));
    for (auto& t : pool) t.join();
  }

  std::vector<double> kdist(n);
  std::vector<std::vector<std::size_t>> neighbours(n);
  std::vector<double> row(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t m = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row[m++] = dist[i * n + j];
    }
    std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k - 1), row.end());
    kdist[i] = row[k - 1];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && dist[i * n + j] <= kdist[i]) neighbours[i].push_back(j);
    }
  }

  std::vector<double> lrd(n);
  for (std::size_t i = 0; i < n; ++i) {
    double reach = 0.0;
    for (auto j : neighbours[i]) reach += std::max(kdist[j], dist[i * n + j]);
    reach /= static_cast<double>(neighbours[i].size());
    lrd[i] = reach > 0.0 ? std::min(1.0 / reach, kMaxDensity) : kMaxDensity;
  }

  std::vector<double> lof(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (kdist[i] == 0.0) {
      lof[i] = 1.0;
      continue;
    }
    double sum = 0.0;
    for (auto j : neighbours[i]) sum += lrd[j];
    lof[i] = sum / static_cast<double>(neighbours[i].size()) / lrd[i];
  }
  return lof;
}

}  // namespace ontogen
