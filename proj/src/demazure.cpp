#include "cforge/demazure.hpp"

#include <algorithm>

namespace cforge {

namespace {

void check_compatible(const CrystalGraph& g, const WeylGroup& group) {
  if (!(group.cartan() == g.cartan())) throw error("Weyl group and crystal Cartan data differ");
}

// Extends the set downward along all f_i strings through it.
void string_closure(const CrystalGraph& g, std::size_t i, std::vector<char>& in) {
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (!in[b]) continue;
    int cur = static_cast<int>(b);
    while (g.f(i, cur) >= 0) {
      cur = g.f(i, cur);
      in[static_cast<std::size_t>(cur)] = 1;
    }
  }
}

std::vector<int> closure_along_word(const CrystalGraph& g, const Word& word) {
  std::vector<char> in(g.size(), 0);
  in[static_cast<std::size_t>(g.require_highest_weight())] = 1;
  for (std::size_t k = word.size(); k-- > 0;) string_closure(g, word[k], in);
  std::vector<int> members;
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (in[b]) members.push_back(static_cast<int>(b));
  }
  return members;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

DemazureSubset demazure_crystal(const CrystalGraph& g, const WeylGroup& group,
                                const WeylElement& w) {
  check_compatible(g, group);
  const Weight lambda = g.highest_weight();
  WeylElement rep = group.min_coset_rep(w, lambda);
  return DemazureSubset{make_subset(g, closure_along_word(g, rep.normal_word())), rep};
}

SubsetHandle lowering_closure(const CrystalGraph& g, const std::vector<Node>& word) {
  Word indices;
  indices.reserve(word.size());
  for (Node label : word) indices.push_back(g.cartan().index_of(label));
  return make_subset(g, closure_along_word(g, indices));
}

SubsetHandle ideal_subset(const CrystalGraph& g, const WeylGroup& group,
                          const LowerOrderIdeal& ideal) {
  check_compatible(g, group);
  if (ideal.empty()) throw error("ideal_subset: empty lower order ideal");
  std::vector<int> members;
  for (const WeylElement& gen : ideal.generators) {
    members = set_union(members, demazure_crystal(g, group, gen).handle.members);
  }
  return make_subset(g, std::move(members));
}

bool demazure_contains(const CrystalGraph& g, const WeylGroup& group, const WeylElement& u,
                       const WeylElement& w) {
  check_compatible(g, group);
  return group.bruhat_leq(group.min_coset_rep(u, g.highest_weight()), w);
}

AtomSubset demazure_atom(const CrystalGraph& g, const WeylGroup& group, const WeylElement& w) {
  check_compatible(g, group);
  DemazureSubset top = demazure_crystal(g, group, w);
  std::vector<int> lower;
  for (const WeylElement& v : group.coatoms(top.w)) {
    lower = set_union(lower, demazure_crystal(g, group, v).handle.members);
  }
  return AtomSubset{make_subset(g, set_difference(top.handle.members, lower)), top.w};
}

std::vector<AtomSubset> atomic_decomposition(const CrystalGraph& g, const WeylGroup& group,
                                             const LowerOrderIdeal& ideal) {
  check_compatible(g, group);
  const Weight lambda = g.highest_weight();
  std::vector<WeylElement> reps;
  for (const WeylElement& v : ideal.elements) reps.push_back(group.min_coset_rep(v, lambda));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const WeylElement& a, const WeylElement& b) { return a == b; }),
             reps.end());

  std::vector<AtomSubset> atoms;
  std::vector<int> covered;
  for (const WeylElement& v : reps) {
    AtomSubset atom = demazure_atom(g, group, v);
    std::vector<int> overlap;
    std::set_intersection(covered.begin(), covered.end(), atom.handle.members.begin(),
                          atom.handle.members.end(), std::back_inserter(overlap));
    if (!overlap.empty()) throw error("internal: atoms with distinct representatives overlap");
    covered = set_union(covered, atom.handle.members);
    atoms.push_back(std::move(atom));
  }
  if (covered != ideal_subset(g, group, ideal).members)
    throw error("internal: atoms do not partition the ideal subset");
  return atoms;
}

LowerOrderIdeal intersect_ideals(const WeylGroup& group, const LowerOrderIdeal& lhs,
                                 const LowerOrderIdeal& rhs) {
  std::vector<WeylElement> common;
  for (const WeylElement& e : lhs.elements) {
    if (rhs.contains(e)) common.push_back(e);
  }
  return group.ideal_from_elements(std::move(common));
}

SubsetHandle ideal_intersection(const CrystalGraph& g, const WeylGroup& group,
                                const LowerOrderIdeal& lhs, const LowerOrderIdeal& rhs) {
  check_compatible(g, group);
  LowerOrderIdeal meet = intersect_ideals(group, lhs, rhs);
  if (meet.empty()) throw error("ideal_intersection: the ideals are disjoint");
  SubsetHandle through_ideal = ideal_subset(g, group, meet);

  std::vector<int> literal;
  const SubsetHandle a = ideal_subset(g, group, lhs);
  const SubsetHandle b = ideal_subset(g, group, rhs);
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(literal));
  if (literal != through_ideal.members)
    throw error("internal: ideal-lattice intersection disagrees with the member intersection");
  return through_ideal;
}

}  // namespace cforge
