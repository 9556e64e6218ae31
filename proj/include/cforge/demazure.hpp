#pragma once

#include <vector>

#include "cforge/crystal.hpp"
#include "cforge/weyl.hpp"

namespace cforge {

// F_w{b_lambda}: the string-saturating closure of the highest weight element
// along a reduced word of w.  The stored w is the minimal coset
// representative for the highest weight.
struct DemazureSubset {
  SubsetHandle handle;
  WeylElement w;
};

// B_w minus every strictly Bruhat-smaller Demazure subset.
struct AtomSubset {
  SubsetHandle handle;
  WeylElement w;
};

DemazureSubset demazure_crystal(const CrystalGraph& g, const WeylGroup& group,
                                const WeylElement& w);

// The closure of {b_lambda} along an explicit word, sweeping the rightmost
// letter's strings first.  demazure_crystal uses this with a normal word;
// exposing the word lets callers compare closures across reduced words.
SubsetHandle lowering_closure(const CrystalGraph& g, const std::vector<Node>& word);

// Union of Demazure subsets over a lower order ideal; the generators suffice.
SubsetHandle ideal_subset(const CrystalGraph& g, const WeylGroup& group,
                          const LowerOrderIdeal& ideal);

// Whether B_u is contained in B_w, decided purely in the Weyl group.
bool demazure_contains(const CrystalGraph& g, const WeylGroup& group, const WeylElement& u,
                       const WeylElement& w);

// Subtracting over the Bruhat coatoms of the minimal representative suffices.
AtomSubset demazure_atom(const CrystalGraph& g, const WeylGroup& group, const WeylElement& w);

// Pairwise-disjoint atoms, one per distinct minimal coset representative in
// the ideal, whose union is the ideal subset.  Verified internally.
std::vector<AtomSubset> atomic_decomposition(const CrystalGraph& g, const WeylGroup& group,
                                             const LowerOrderIdeal& ideal);

// Computes the intersection through the ideal lattice and checks it against
// the literal member intersection; a mismatch throws.
SubsetHandle ideal_intersection(const CrystalGraph& g, const WeylGroup& group,
                                const LowerOrderIdeal& lhs, const LowerOrderIdeal& rhs);

// The ideal lattice intersection itself (down-closed sets intersect).
LowerOrderIdeal intersect_ideals(const WeylGroup& group, const LowerOrderIdeal& lhs,
                                 const LowerOrderIdeal& rhs);

}  // namespace cforge
