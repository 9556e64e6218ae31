#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cforge/character.hpp"
#include "cforge/crystal.hpp"
#include "cforge/demazure.hpp"

namespace cforge {

// An i-string meeting the subset in something other than nothing, everything,
// or its head alone.
struct ExtremalWitness {
  Node i = 0;
  std::vector<std::string> string_ids;
  std::vector<std::string> intersection_ids;
  std::string note;
};

// A starred lowering path between extremal members whose first step, once
// dropped, escapes the subset.
struct IdealWitness {
  std::string from_id;
  std::string to_id;
  std::vector<Node> full_path;     // application order
  std::vector<Node> dropped_path;  // full_path without its first letter
  std::string escaped_id;
};

// Two or more Bruhat-incomparable maximal representatives.
struct PrincipalWitness {
  std::vector<std::vector<Node>> maxima_words;
};

struct ClassifyReport {
  bool extremal = false;
  bool ideal = false;
  bool principal = false;
  bool demazure = false;
  std::optional<WeylElement> max_rep;  // the Bruhat maximum, when principal
  std::optional<LowerOrderIdeal> generating_ideal;
  std::optional<ExtremalWitness> extremal_witness;
  std::optional<IdealWitness> ideal_witness;
  std::optional<PrincipalWitness> principal_witness;
};

// Every i-string meets X in nothing, everything, or its head alone, and X is
// nonempty.
bool is_extremal(const SubsetHandle& x, ExtremalWitness* witness = nullptr);

// X is extremal and closed under dropping the first letter of any starred
// lowering path between its extremal members.  Paths between extremal members
// of weights u(lambda), v(lambda) are enumerated as the reduced words of
// v u^{-1}, which requires the lengths to add up (otherwise no such path
// exists).
bool is_ideal_local(const SubsetHandle& x, const WeylGroup& group,
                    IdealWitness* witness = nullptr);

// The down-closed set of representatives carried by X's extremal weights;
// throws if the subset it generates is not X.
LowerOrderIdeal recover_ideal(const SubsetHandle& x, const WeylGroup& group);

// X is extremal, its extremal representatives are Bruhat-down-closed, and the
// ideal they generate reproduces X.  Must agree with is_ideal_local.
bool is_ideal_global(const SubsetHandle& x, const WeylGroup& group);

// X is extremal and its extremal representatives have a Bruhat maximum.
// Throws when X is not extremal.
std::pair<bool, std::optional<WeylElement>> is_principal(const SubsetHandle& x,
                                                         const WeylGroup& group,
                                                         PrincipalWitness* witness = nullptr);

// Extremal + ideal + principal; on success returns w with X = B_w and checks
// the set equality.
std::pair<bool, std::optional<WeylElement>> is_demazure(const SubsetHandle& x,
                                                        const WeylGroup& group);

// For X with the same character as B_w, X equals B_w exactly when X is ideal.
// Throws when the characters differ.
bool is_demazure_by_character(const SubsetHandle& x, const WeylGroup& group,
                              const WeylElement& w);

ClassifyReport classify(const SubsetHandle& x, const WeylGroup& group);

}  // namespace cforge
