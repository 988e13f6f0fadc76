// Deterministic weight-matrix corpus shared by the unit and acceptance
// suites.
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "tropmat/rational.hpp"
#include "tropmat/realize.hpp"

namespace corpus {

inline tropmat::WeightMatrix random_weights(int n, int d,
                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 4);
  std::vector<std::vector<tropmat::Rational>> rows(
      static_cast<size_t>(n),
      std::vector<tropmat::Rational>(static_cast<size_t>(d)));
  for (auto& row : rows) {
    for (auto& cell : row) {
      cell = tropmat::Rational(num(rng), den(rng));
    }
  }
  return tropmat::WeightMatrix(n, d, std::move(rows));
}

/// 12 random matrices plus the all-zero matrix per shape; 65 in total.
inline std::vector<tropmat::WeightMatrix> standard_corpus() {
  const std::pair<int, int> shapes[] = {
      {2, 2}, {2, 3}, {3, 3}, {4, 3}, {3, 4}};
  std::mt19937_64 rng(20240813);
  std::vector<tropmat::WeightMatrix> out;
  for (const auto& [n, d] : shapes) {
    for (int k = 0; k < 12; ++k) {
      out.push_back(random_weights(n, d, rng));
    }
    out.push_back(tropmat::WeightMatrix::zero(n, d));
  }
  return out;
}

}  // namespace corpus
