#pragma once

// Random epsilon tables and a direct reading of the admissibility conditions.

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using EpsilonTable = std::vector<std::vector<int>>;

// Half the rows follow the admissible pattern (unit vector first, constant
// 0 or 2 afterwards), sometimes with one entry perturbed.
inline EpsilonTable random_epsilon_table(std::mt19937& rng) {
  std::uniform_int_distribution<int> value(0, 2);
  std::uniform_int_distribution<int> size(1, 5);
  std::bernoulli_distribution coin(0.5);
  const int m = size(rng), rows = size(rng);
  EpsilonTable table(rows, std::vector<int>(m));
  for (int r = 0; r < rows; ++r) {
    if (coin(rng)) {
      if (r == 0) {
        std::fill(table[r].begin(), table[r].end(), 0);
        table[r][size(rng) % m] = 1;
      } else {
        std::fill(table[r].begin(), table[r].end(), coin(rng) ? 2 : 0);
      }
      if (value(rng) == 0 && coin(rng)) table[r][size(rng) % m] = value(rng);
    } else {
      for (int& v : table[r]) v = value(rng);
    }
  }
  return table;
}

// The identity embedding has exactly one entry 1 and the rest 0; every other
// embedding is all 0 or all 2.
inline bool admissibility_conditions_hold(const EpsilonTable& table) {
  const auto& first = table.front();
  const auto m = static_cast<long>(first.size());
  bool ok = std::count(first.begin(), first.end(), 1) == 1 && std::count(first.begin(), first.end(), 0) == m - 1;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& row = table[r];
    ok = ok && (std::count(row.begin(), row.end(), 0) == m || std::count(row.begin(), row.end(), 2) == m);
  }
  return ok;
}

}  // namespace oracle
