#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cforge/cartan.hpp"

namespace cforge {

// A word in the simple reflections, stored as indices into the index set.
using Word = std::vector<std::size_t>;

// A Weyl group element in canonical form.  The key is the image of
// rho = (1,...,1) under the element; rho is regular dominant, so keys are
// unique per element and equality is vector equality.  The stored word is the
// lexicographically least reduced word (letters compared by index-set
// position), which doubles as the element's length.
class WeylElement {
public:
  WeylElement() = default;
  WeylElement(Weight key, Word word) : key_(std::move(key)), word_(std::move(word)) {}

  const Weight& canonical_key() const { return key_; }
  const Word& normal_word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  bool operator==(const WeylElement& o) const { return key_ == o.key_; }
  // (length, word) order; deterministic listings everywhere.
  bool operator<(const WeylElement& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

private:
  Weight key_;
  Word word_;
};

// A Bruhat-down-closed subset of the Weyl group, materialized.
struct LowerOrderIdeal {
  std::vector<WeylElement> generators;  // the maximal antichain, sorted
  std::vector<WeylElement> elements;    // full down-closed set, sorted

  bool contains(const WeylElement& w) const;
  bool empty() const { return elements.empty(); }
};

class WeylGroup {
public:
  explicit WeylGroup(CartanData cartan);

  const CartanData& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.rank(); }

  WeylElement identity() const;
  WeylElement simple(std::size_t i) const;

  // Multiplies out an arbitrary word (not necessarily reduced) and
  // canonicalizes: the key is the word acting on rho; the normal word is
  // recovered by repeatedly peeling the smallest left descent off the key.
  WeylElement from_word(std::span<const std::size_t> word) const;
  WeylElement from_word(const Word& word) const {
    return from_word(std::span<const std::size_t>(word));
  }
  WeylElement from_labels(const std::vector<Node>& labels) const;
  std::vector<Node> to_labels(const WeylElement& w) const;

  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& a) const;
  Weight apply(const WeylElement& w, const Weight& v) const;

  // Indices i with l(s_i w) < l(w); read off the sign pattern of the key.
  std::vector<std::size_t> left_descents(const WeylElement& w) const;

  std::vector<Word> all_reduced_words(const WeylElement& w) const;

  // Strong Bruhat order, by the standard descent recursion.
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;

  // Elements v covered by w: l(v) = l(w) - 1 and v < w.
  std::vector<WeylElement> coatoms(const WeylElement& w) const;

  // Minimal length representative of w W_lambda, for lambda dominant.
  WeylElement min_coset_rep(const WeylElement& w, const Weight& lambda) const;

  // The minimal u with u lambda = mu, if mu lies in the orbit of lambda.
  std::optional<WeylElement> orbit_element(const Weight& mu, const Weight& lambda) const;

  LowerOrderIdeal lower_ideal_close(const std::vector<WeylElement>& generators) const;
  // Wraps an already down-closed element list; verified via one-letter
  // deletions of normal words.
  LowerOrderIdeal ideal_from_elements(std::vector<WeylElement> elements) const;

  // Whole group, sorted, if it has at most `cap` elements.
  std::optional<std::vector<WeylElement>> enumerate(std::size_t cap) const;
  // Same, but throwing instead of returning nullopt.
  std::vector<WeylElement> all_elements(std::size_t cap = 1'000'000) const;
  bool is_finite_type(std::size_t cap = 1'000'000) const { return enumerate(cap).has_value(); }

private:
  Word peel(Weight key) const;

  CartanData cartan_;
  Weight rho_;
};

}  // namespace cforge
