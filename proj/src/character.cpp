#include "cforge/character.hpp"

#include <algorithm>
#include <sstream>

namespace cforge {

FormalCharacter::FormalCharacter(std::map<Weight, long long> terms) : terms_(std::move(terms)) {
  for (const auto& [w, m] : terms_) {
    if (m < 1) throw error("character multiplicities must be positive");
  }
}

long long FormalCharacter::total() const {
  long long t = 0;
  for (const auto& [w, m] : terms_) t += m;
  return t;
}

void FormalCharacter::add(const Weight& w, long long mult) {
  if (mult < 1) throw error("character multiplicities must be positive");
  terms_[w] += mult;
}

FormalCharacter character(const SubsetHandle& x) {
  FormalCharacter ch;
  for (int b : x.members) ch.add(x.graph->element(b).wt);
  return ch;
}

bool char_equal(const FormalCharacter& a, const FormalCharacter& b) { return a == b; }

std::string monomial_string(const FormalCharacter& ch, int n) {
  if (n < 2) throw error("monomial_string: n must be at least 2");
  if (ch.terms().empty()) return "0";
  std::size_t rank = static_cast<std::size_t>(n - 1);

  // Tail sums t_k = sum_{j>=k} wt_j give exponents e_k = e_n + t_k; pick the
  // smallest common degree that keeps every term nonnegative.
  struct Lift {
    std::vector<long long> tails;
    long long tail_sum;
    long long min_degree;
    long long mult;
  };
  std::vector<Lift> lifts;
  long long degree = 0;
  for (const auto& [w, mult] : ch.terms()) {
    if (w.rank() != rank) throw error("monomial_string: weight rank does not match n");
    Lift lift;
    lift.tails.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t k = rank; k-- > 0;) lift.tails[k] = lift.tails[k + 1] + w[k];
    long long min_tail = *std::min_element(lift.tails.begin(), lift.tails.end());
    long long base = std::max<long long>(0, -min_tail);
    lift.tail_sum = 0;
    for (long long t : lift.tails) lift.tail_sum += t;
    lift.min_degree = n * base + lift.tail_sum;
    lift.mult = mult;
    degree = std::max(degree, lift.min_degree);
    lifts.push_back(std::move(lift));
  }
  std::vector<std::pair<std::vector<long long>, long long>> monomials;
  for (const Lift& lift : lifts) {
    if ((degree - lift.tail_sum) % n != 0)
      throw error("monomial_string: weights do not come from one type A tableau crystal");
    long long base = (degree - lift.tail_sum) / n;
    std::vector<long long> expo(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < expo.size(); ++k) expo[k] = base + lift.tails[k];
    monomials.emplace_back(std::move(expo), lift.mult);
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::ostringstream out;
  bool first_term = true;
  for (const auto& [expo, mult] : monomials) {
    if (!first_term) out << " + ";
    first_term = false;
    bool wrote = false;
    if (mult > 1) {
      out << mult;
      wrote = true;
    }
    for (std::size_t k = 0; k < expo.size(); ++k) {
      if (expo[k] == 0) continue;
      if (wrote) out << '*';
      out << 'x' << (k + 1);
      if (expo[k] > 1) out << '^' << expo[k];
      wrote = true;
    }
    if (!wrote) out << '1';
  }
  return out.str();
}

std::vector<std::pair<WeylElement, FormalCharacter>> atom_character_table(
    const CrystalGraph& g, const WeylGroup& group, const LowerOrderIdeal& ideal) {
  std::vector<std::pair<WeylElement, FormalCharacter>> table;
  for (const AtomSubset& atom : atomic_decomposition(g, group, ideal)) {
    table.emplace_back(atom.w, character(atom.handle));
  }
  return table;
}

}  // namespace cforge
