#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cforge/error.hpp"

namespace cforge {

// Label of a Dynkin diagram node, as written in the index set.
using Node = int;

// Integer weight in the fundamental-weight basis:
// coords[i] = <alpha_i^vee, weight> for the i-th node of the index set.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<long long> coords) : coords_(std::move(coords)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }

  std::size_t rank() const { return coords_.size(); }
  long long operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<long long>& coords() const { return coords_; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool is_zero() const;

  bool operator==(const Weight& o) const = default;
  // Lexicographic; used only to fix deterministic orderings.
  std::strong_ordering operator<=>(const Weight& o) const = default;

  std::string to_string() const;  // "(1,-2)"

private:
  std::vector<long long> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

// A (generalized) Cartan matrix with its ordered index set.
// Entries a_{ij} = <alpha_i^vee, alpha_j>; the simple root alpha_j is column j.
// A positive rational symmetrizer is computed at construction and the matrix
// is rejected if none exists.
class CartanData {
public:
  CartanData(std::vector<Node> index_set, std::vector<std::vector<long long>> matrix);

  static CartanData type_a(int rank);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<Node>& index_set() const { return labels_; }
  std::size_t index_of(Node label) const;  // throws on unknown label
  Node label_of(std::size_t i) const { return labels_[i]; }
  long long entry(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

  Weight simple_root(std::size_t j) const;
  // Reduced positive rationals d_i with diag(d) * A symmetric.
  const std::vector<std::pair<long long, long long>>& symmetrizer() const { return symmetrizer_; }

  long long pairing(Node i, const Weight& w) const { return w[index_of(i)]; }
  bool is_dominant(const Weight& w) const;
  // s_i(w) = w - <alpha_i^vee, w> alpha_i
  Weight reflect(std::size_t i, const Weight& w) const;

  // Whether lambda - mu is a nonnegative integer combination of simple roots.
  // For a nonsingular matrix this is an exact linear solve.  For a singular
  // matrix a height cap must be supplied; the search throws if the cap is
  // reached without a certificate.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  bool dominance_leq(const Weight& mu, const Weight& lambda, long long height_cap) const;

  bool operator==(const CartanData& o) const {
    return labels_ == o.labels_ && matrix_ == o.matrix_;
  }

private:
  bool dominance_impl(const Weight& mu, const Weight& lambda,
                      std::optional<long long> height_cap) const;

  std::vector<Node> labels_;
  std::vector<std::vector<long long>> matrix_;
  std::vector<std::pair<long long, long long>> symmetrizer_;
};

}  // namespace cforge
