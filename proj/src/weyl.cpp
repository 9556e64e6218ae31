#include "cforge/weyl.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace cforge {

namespace {

// u <= w in Bruhat order iff, for any left descent i of w:
//   s_i u <= s_i w   when i is also a left descent of u,
//   u <= s_i w       otherwise.
bool bruhat_rec(const CartanData& c, const Weight& key_u, std::size_t len_u, const Weight& key_w,
                std::size_t len_w) {
  if (len_u == 0) return true;
  if (len_u > len_w) return false;
  if (key_u == key_w) return true;
  if (len_u == len_w) return false;
  std::size_t i = 0;
  while (key_w[i] >= 0) ++i;
  Weight next_w = c.reflect(i, key_w);
  if (key_u[i] < 0) return bruhat_rec(c, c.reflect(i, key_u), len_u - 1, next_w, len_w - 1);
  return bruhat_rec(c, key_u, len_u, next_w, len_w - 1);
}

}  // namespace

bool LowerOrderIdeal::contains(const WeylElement& w) const {
  for (const WeylElement& e : elements) {
    if (e == w) return true;
  }
  return false;
}

WeylGroup::WeylGroup(CartanData cartan)
    : cartan_(std::move(cartan)), rho_(std::vector<long long>(cartan_.rank(), 1)) {}

WeylElement WeylGroup::identity() const { return WeylElement(rho_, {}); }

WeylElement WeylGroup::simple(std::size_t i) const {
  return WeylElement(cartan_.reflect(i, rho_), {i});
}

Word WeylGroup::peel(Weight key) const {
  Word out;
  for (;;) {
    std::size_t i = 0;
    while (i < cartan_.rank() && key[i] >= 0) ++i;
    if (i == cartan_.rank()) break;
    out.push_back(i);
    key = cartan_.reflect(i, key);
  }
  if (!(key == rho_)) throw error("internal: weight is not in the regular orbit");
  return out;
}

WeylElement WeylGroup::from_word(std::span<const std::size_t> word) const {
  Weight key = rho_;
  for (std::size_t k = word.size(); k-- > 0;) {
    if (word[k] >= cartan_.rank()) throw error("word letter out of range");
    key = cartan_.reflect(word[k], key);
  }
  return WeylElement(key, peel(key));
}

WeylElement WeylGroup::from_labels(const std::vector<Node>& labels) const {
  Word word;
  word.reserve(labels.size());
  for (Node n : labels) word.push_back(cartan_.index_of(n));
  return from_word(word);
}

std::vector<Node> WeylGroup::to_labels(const WeylElement& w) const {
  std::vector<Node> out;
  out.reserve(w.length());
  for (std::size_t i : w.normal_word()) out.push_back(cartan_.label_of(i));
  return out;
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  Weight key = b.canonical_key();
  const Word& wa = a.normal_word();
  for (std::size_t k = wa.size(); k-- > 0;) key = cartan_.reflect(wa[k], key);
  return WeylElement(key, peel(key));
}

WeylElement WeylGroup::inverse(const WeylElement& a) const {
  Word rev(a.normal_word().rbegin(), a.normal_word().rend());
  return from_word(rev);
}

Weight WeylGroup::apply(const WeylElement& w, const Weight& v) const {
  Weight out = v;
  const Word& word = w.normal_word();
  for (std::size_t k = word.size(); k-- > 0;) out = cartan_.reflect(word[k], out);
  return out;
}

std::vector<std::size_t> WeylGroup::left_descents(const WeylElement& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cartan_.rank(); ++i) {
    if (w.canonical_key()[i] < 0) out.push_back(i);
  }
  return out;
}

std::vector<Word> WeylGroup::all_reduced_words(const WeylElement& w) const {
  std::unordered_map<Weight, std::vector<Word>, WeightHash> memo;
  auto rec = [&](auto&& self, const Weight& key, std::size_t len) -> const std::vector<Word>& {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Word> words;
    if (len == 0) {
      words.push_back({});
    } else {
      for (std::size_t i = 0; i < cartan_.rank(); ++i) {
        if (key[i] >= 0) continue;
        for (const Word& tail : self(self, cartan_.reflect(i, key), len - 1)) {
          Word word;
          word.reserve(len);
          word.push_back(i);
          word.insert(word.end(), tail.begin(), tail.end());
          words.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(key, std::move(words)).first->second;
  };
  return rec(rec, w.canonical_key(), w.length());
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
  return bruhat_rec(cartan_, u.canonical_key(), u.length(), w.canonical_key(), w.length());
}

std::vector<WeylElement> WeylGroup::coatoms(const WeylElement& w) const {
  std::vector<WeylElement> out;
  const Word& word = w.normal_word();
  for (std::size_t k = 0; k < word.size(); ++k) {
    Word del;
    del.reserve(word.size() - 1);
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (j != k) del.push_back(word[j]);
    }
    WeylElement v = from_word(del);
    if (v.length() + 1 == w.length()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const WeylElement& a, const WeylElement& b) { return a == b; }),
            out.end());
  return out;
}

WeylElement WeylGroup::min_coset_rep(const WeylElement& w, const Weight& lambda) const {
  if (!cartan_.is_dominant(lambda)) throw error("min_coset_rep: weight is not dominant");
  auto rep = orbit_element(apply(w, lambda), lambda);
  if (!rep) throw error("internal: orbit ascent failed to reach the dominant weight");
  return *rep;
}

std::optional<WeylElement> WeylGroup::orbit_element(const Weight& mu,
                                                    const Weight& lambda) const {
  if (!cartan_.is_dominant(lambda)) throw error("orbit_element: weight is not dominant");
  // Greedy ascent: reflect the smallest negative coordinate until dominant.
  // The recorded letters, in application order, multiply to the minimal
  // length element sending lambda to mu.
  Weight cur = mu;
  Word letters;
  for (;;) {
    std::size_t i = 0;
    while (i < cartan_.rank() && cur[i] >= 0) ++i;
    if (i == cartan_.rank()) break;
    letters.push_back(i);
    cur = cartan_.reflect(i, cur);
  }
  if (!(cur == lambda)) return std::nullopt;
  return from_word(letters);
}

LowerOrderIdeal WeylGroup::lower_ideal_close(const std::vector<WeylElement>& generators) const {
  std::unordered_map<Weight, WeylElement, WeightHash> seen;
  for (const WeylElement& g : generators) {
    const Word& word = g.normal_word();
    if (word.size() >= 63) throw error("lower_ideal_close: generator is too long");
    std::uint64_t masks = 1ull << word.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      Word sub;
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (mask & (1ull << k)) sub.push_back(word[k]);
      }
      WeylElement el = from_word(sub);
      seen.emplace(el.canonical_key(), std::move(el));
    }
  }
  std::vector<WeylElement> elements;
  elements.reserve(seen.size());
  for (auto& [key, el] : seen) elements.push_back(std::move(el));
  std::sort(elements.begin(), elements.end());

  LowerOrderIdeal ideal;
  ideal.elements = std::move(elements);
  for (const WeylElement& e : ideal.elements) {
    bool maximal = true;
    for (const WeylElement& f : ideal.elements) {
      if (!(e == f) && bruhat_leq(e, f)) {
        maximal = false;
        break;
      }
    }
    if (maximal) ideal.generators.push_back(e);
  }
  return ideal;
}

LowerOrderIdeal WeylGroup::ideal_from_elements(std::vector<WeylElement> elements) const {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end(),
                             [](const WeylElement& a, const WeylElement& b) { return a == b; }),
                 elements.end());
  // Down-closure check: every one-letter deletion of a normal word must
  // normalize back into the set (this covers all Bruhat coatoms).
  for (const WeylElement& e : elements) {
    const Word& word = e.normal_word();
    for (std::size_t k = 0; k < word.size(); ++k) {
      Word del;
      for (std::size_t j = 0; j < word.size(); ++j) {
        if (j != k) del.push_back(word[j]);
      }
      WeylElement v = from_word(del);
      if (!std::binary_search(elements.begin(), elements.end(), v,
                              [](const WeylElement& a, const WeylElement& b) { return a < b; })) {
        throw error("ideal_from_elements: set is not Bruhat-down-closed");
      }
    }
  }
  LowerOrderIdeal ideal;
  ideal.elements = std::move(elements);
  for (const WeylElement& e : ideal.elements) {
    bool maximal = true;
    for (const WeylElement& f : ideal.elements) {
      if (!(e == f) && bruhat_leq(e, f)) {
        maximal = false;
        break;
      }
    }
    if (maximal) ideal.generators.push_back(e);
  }
  return ideal;
}

std::optional<std::vector<WeylElement>> WeylGroup::enumerate(std::size_t cap) const {
  std::unordered_set<Weight, WeightHash> seen;
  std::vector<WeylElement> all;
  std::vector<WeylElement> layer{identity()};
  seen.insert(rho_);
  all.push_back(identity());
  while (!layer.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : layer) {
      for (std::size_t i = 0; i < cartan_.rank(); ++i) {
        if (w.canonical_key()[i] < 0) continue;  // would descend
        Weight key = cartan_.reflect(i, w.canonical_key());
        if (!seen.insert(key).second) continue;
        WeylElement el(key, peel(key));
        next.push_back(el);
        all.push_back(std::move(el));
        if (all.size() > cap) return std::nullopt;
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<WeylElement> WeylGroup::all_elements(std::size_t cap) const {
  auto all = enumerate(cap);
  if (!all) throw error("Weyl group exceeds the enumeration cap " + std::to_string(cap));
  return std::move(*all);
}

}  // namespace cforge
