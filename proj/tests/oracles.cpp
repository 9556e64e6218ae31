#include "oracles.hpp"

#include <numeric>

namespace oracles {

namespace {

bool filling_is_semistandard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0 && c < rows[r - 1].size() && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

}  // namespace

long long ssyt_count_brute(int n, const std::vector<int>& shape) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  }
  if (cells.empty()) return 1;
  std::vector<std::vector<int>> rows;
  for (int p : shape) rows.emplace_back(static_cast<std::size_t>(std::max(p, 0)), 1);
  long long count = 0;
  std::vector<int> state(cells.size(), 1);
  for (;;) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      rows[static_cast<std::size_t>(cells[k].first)][static_cast<std::size_t>(cells[k].second)] =
          state[k];
    if (filling_is_semistandard(rows)) ++count;
    std::size_t k = 0;
    while (k < state.size() && state[k] == n) {
      state[k] = 1;
      ++k;
    }
    if (k == state.size()) break;
    ++state[k];
  }
  return count;
}

long long weyl_dim_type_a(int n, std::vector<int> shape) {
  shape.resize(static_cast<std::size_t>(n), 0);
  long long num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= shape[static_cast<std::size_t>(i)] - shape[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  return num / den;
}

std::set<std::vector<long long>> orbit_brute(const cforge::CartanData& c,
                                             const cforge::Weight& lambda) {
  std::set<std::vector<long long>> seen{lambda.coords()};
  std::vector<cforge::Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<cforge::Weight> next;
    for (const cforge::Weight& w : frontier) {
      for (std::size_t i = 0; i < c.rank(); ++i) {
        cforge::Weight r = c.reflect(i, w);
        if (seen.insert(r.coords()).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

bool dominance_brute(const cforge::CartanData& c, const cforge::Weight& mu,
                     const cforge::Weight& lambda, int height_cap) {
  cforge::Weight diff = lambda - mu;
  std::size_t n = c.rank();
  std::vector<int> x(n, 0);
  auto rec = [&](auto&& self, std::size_t k, int budget) -> bool {
    if (k == n) {
      cforge::Weight sum = cforge::Weight::zero(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (int t = 0; t < x[j]; ++t) sum = sum + c.simple_root(j);
      }
      return sum == diff;
    }
    for (int v = 0; v <= budget; ++v) {
      x[k] = v;
      if (self(self, k + 1, budget - v)) return true;
    }
    x[k] = 0;
    return false;
  };
  return rec(rec, 0, height_cap);
}

}  // namespace oracles
