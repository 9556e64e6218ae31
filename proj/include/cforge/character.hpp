#pragma once

#include <map>
#include <string>
#include <vector>

#include "cforge/demazure.hpp"

namespace cforge {

// Weight multiset of a subset; terms kept in lexicographic order.
class FormalCharacter {
public:
  FormalCharacter() = default;
  explicit FormalCharacter(std::map<Weight, long long> terms);

  const std::map<Weight, long long>& terms() const { return terms_; }
  long long total() const;
  void add(const Weight& w, long long mult = 1);

  bool operator==(const FormalCharacter& o) const = default;

private:
  std::map<Weight, long long> terms_;
};

FormalCharacter character(const SubsetHandle& x);
bool char_equal(const FormalCharacter& a, const FormalCharacter& b);

// Renders a type A character as a polynomial in x_1..x_n.  Each weight is
// lifted to the unique exponent vector with the smallest common degree; the
// determinant twist is quotiented out.  Throws when the terms do not lift
// consistently.
std::string monomial_string(const FormalCharacter& ch, int n);

// Per-atom characters over an ideal; their sum is the ideal subset character.
std::vector<std::pair<WeylElement, FormalCharacter>> atom_character_table(
    const CrystalGraph& g, const WeylGroup& group, const LowerOrderIdeal& ideal);

}  // namespace cforge
