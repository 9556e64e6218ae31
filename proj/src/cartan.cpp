#include "cforge/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cforge {

namespace {

// Exact rational arithmetic for the symmetrizer and the dominance solve.
// Denominators stay tiny at the matrix sizes this library works with.
struct Rat {
  long long num = 0;
  long long den = 1;

  static Rat of(long long n, long long d = 1) {
    Rat r{n, d};
    r.normalize();
    return r;
  }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
  Rat operator+(const Rat& o) const { return of(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return of(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return of(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw error("rational division by zero");
    return of(num * o.den, den * o.num);
  }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  bool is_negative() const { return num < 0; }
};

// Row-reduces [A | d].  Returns 0 if inconsistent, 1 if a unique solution
// exists (written to x), 2 if consistent but underdetermined.
int gauss_solve(std::vector<std::vector<Rat>> m, std::size_t n, std::vector<Rat>& x) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[row], m[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rat factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] = m[r][c] - factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    if (!m[r][n].is_zero()) return 0;
  }
  if (pivot_col.size() < n) return 2;
  x.assign(n, Rat{});
  for (std::size_t r = 0; r < n; ++r) x[pivot_col[r]] = m[r][n] / m[r][pivot_col[r]];
  return 1;
}

bool search_combination(const std::vector<std::vector<long long>>& a,
                        std::vector<long long>& residual, std::size_t col, long long budget) {
  std::size_t n = residual.size();
  if (col == n) {
    return std::all_of(residual.begin(), residual.end(), [](long long v) { return v == 0; });
  }
  for (long long k = 0; k <= budget; ++k) {
    if (search_combination(a, residual, col + 1, budget - k)) return true;
    for (std::size_t i = 0; i < n; ++i) residual[i] -= a[i][col];
  }
  for (std::size_t i = 0; i < n; ++i) residual[i] += (budget + 1) * a[i][col];
  return false;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
  if (rank() != o.rank()) throw error("weight rank mismatch");
  std::vector<long long> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
  if (rank() != o.rank()) throw error("weight rank mismatch");
  std::vector<long long> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long long v) { return v == 0; });
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 1469598103934665603ull;
  for (long long v : w.coords()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

CartanData::CartanData(std::vector<Node> index_set, std::vector<std::vector<long long>> matrix)
    : labels_(std::move(index_set)), matrix_(std::move(matrix)) {
  std::size_t n = labels_.size();
  if (n == 0) throw error("empty index set");
  {
    std::vector<Node> sorted(labels_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error("duplicate node label in index set");
  }
  if (matrix_.size() != n) throw error("Cartan matrix is not square over the index set");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) throw error("Cartan matrix is not square over the index set");
    if (matrix_[i][i] != 2) throw error("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] > 0) throw error("Cartan matrix off-diagonal entry is positive");
      if ((matrix_[i][j] == 0) != (matrix_[j][i] == 0))
        throw error("Cartan matrix zero pattern is not symmetric");
    }
  }

  // Propagate d_i a_{ij} = d_j a_{ji} along the Dynkin graph, one component
  // at a time, then verify the whole relation.
  std::vector<Rat> d(n, Rat{0, 1});
  for (std::size_t start = 0; start < n; ++start) {
    if (!d[start].is_zero()) continue;
    d[start] = Rat::of(1);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || matrix_[i][j] == 0) continue;
        Rat cand = d[i] * Rat::of(matrix_[i][j], matrix_[j][i]);
        if (d[j].is_zero()) {
          d[j] = cand;
          stack.push_back(j);
        } else if (!(d[j] == cand)) {
          throw error("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].is_negative() || d[i].is_zero()) throw error("Cartan matrix is not symmetrizable");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(d[i] * Rat::of(matrix_[i][j]) == d[j] * Rat::of(matrix_[j][i])))
        throw error("Cartan matrix is not symmetrizable");
    }
    symmetrizer_.emplace_back(d[i].num, d[i].den);
  }
}

CartanData CartanData::type_a(int rank) {
  if (rank < 1) throw error("type A rank must be at least 1");
  std::size_t n = static_cast<std::size_t>(rank);
  std::vector<Node> labels(n);
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<Node>(i + 1);
    m[i][i] = 2;
    if (i + 1 < n) {
      m[i][i + 1] = -1;
      m[i + 1][i] = -1;
    }
  }
  return CartanData(std::move(labels), std::move(m));
}

std::size_t CartanData::index_of(Node label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw error("unknown node label " + std::to_string(label));
}

Weight CartanData::simple_root(std::size_t j) const {
  std::vector<long long> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = matrix_[i][j];
  return Weight(std::move(c));
}

bool CartanData::is_dominant(const Weight& w) const {
  if (w.rank() != rank()) throw error("weight rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) {
    if (w[i] < 0) return false;
  }
  return true;
}

Weight CartanData::reflect(std::size_t i, const Weight& w) const {
  if (w.rank() != rank()) throw error("weight rank mismatch");
  long long c = w[i];
  std::vector<long long> out(w.coords());
  for (std::size_t j = 0; j < rank(); ++j) out[j] -= c * matrix_[j][i];
  return Weight(std::move(out));
}

bool CartanData::dominance_leq(const Weight& mu, const Weight& lambda) const {
  return dominance_impl(mu, lambda, std::nullopt);
}

bool CartanData::dominance_leq(const Weight& mu, const Weight& lambda,
                               long long height_cap) const {
  return dominance_impl(mu, lambda, height_cap);
}

bool CartanData::dominance_impl(const Weight& mu, const Weight& lambda,
                                std::optional<long long> height_cap) const {
  std::size_t n = rank();
  if (mu.rank() != n || lambda.rank() != n) throw error("weight rank mismatch");
  Weight diff = lambda - mu;
  if (diff.is_zero()) return true;

  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat::of(matrix_[i][j]);
    m[i][n] = Rat::of(diff[i]);
  }
  std::vector<Rat> x;
  switch (gauss_solve(std::move(m), n, x)) {
    case 0:
      return false;
    case 1:
      for (const Rat& v : x) {
        if (!v.is_integer() || v.is_negative()) return false;
      }
      return true;
    default:
      break;
  }
  if (!height_cap)
    throw error("dominance_leq: singular Cartan matrix requires an explicit height cap");
  std::vector<long long> residual(n);
  for (std::size_t i = 0; i < n; ++i) residual[i] = diff[i];
  if (search_combination(matrix_, residual, 0, *height_cap)) return true;
  throw error("dominance_leq: height cap " + std::to_string(*height_cap) +
              " exhausted without a certificate");
}

}  // namespace cforge
