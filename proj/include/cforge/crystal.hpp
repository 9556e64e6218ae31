#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cforge/cartan.hpp"
#include "cforge/weyl.hpp"

namespace cforge {

// --- Type A tableau model ---------------------------------------------------

// A semistandard Young tableau: rows weakly increase, columns strictly
// increase, entries in 1..n.
struct Tableau {
  std::vector<std::vector<int>> rows;

  bool is_semistandard(int n) const;
  std::vector<int> content(int n) const;  // multiplicity of each entry
  Weight weight(int n) const;             // n-1 fundamental coordinates
  std::string id() const;                 // canonical "[[1,1],[2]]"
  bool operator==(const Tableau& o) const = default;
};

std::vector<Tableau> semistandard_tableaux(int n, const std::vector<int>& shape);
Tableau superstandard_tableau(const std::vector<int>& shape);

// Far-eastern reading: columns right to left, each column top to bottom.
struct ReadingEntry {
  int letter;
  int row;
  int col;
};
std::vector<ReadingEntry> reading_word(const Tableau& t);

// Crystal operators on tableaux by the signature rule.  Mark each letter i
// as '+' and each i+1 as '-' along the reading word, cancel every '+'
// immediately left of a '-' among surviving marks; f_i raises the letter of
// the leftmost surviving '+', e_i lowers the letter of the rightmost
// surviving '-'.
std::optional<Tableau> tableau_f(const Tableau& t, int i);
std::optional<Tableau> tableau_e(const Tableau& t, int i);
int tableau_phi(const Tableau& t, int i);
int tableau_eps(const Tableau& t, int i);

// --- Crystal graphs ----------------------------------------------------------

struct CrystalElement {
  std::string id;
  Weight wt;
};

struct CrystalEdgeSpec {
  std::string src;
  Node i;
  std::string dst;
};

// A finite labeled digraph satisfying the crystal axioms:
//   (a) e_i(b) = b' iff f_i(b') = b (edges are single-valued both ways),
//   (b) an f_i step lowers the weight by exactly alpha_i,
//   (c) every i-string is finite,
//   (d) phi_i(b) = <alpha_i^vee, wt(b)> + eps_i(b).
// All four are checked at construction; immutable afterwards.
class CrystalGraph {
public:
  CrystalGraph(CartanData cartan, std::vector<CrystalElement> elements,
               const std::vector<CrystalEdgeSpec>& edges);

  const CartanData& cartan() const { return cartan_; }
  std::size_t size() const { return elements_.size(); }
  const CrystalElement& element(int b) const { return elements_[static_cast<std::size_t>(b)]; }
  std::optional<int> index_of(const std::string& id) const;

  // i is an index into the Cartan index set; -1 means absent.
  int f(std::size_t i, int b) const { return f_edge_[static_cast<std::size_t>(b)][i]; }
  int e(std::size_t i, int b) const { return e_edge_[static_cast<std::size_t>(b)][i]; }
  int phi(std::size_t i, int b) const;
  int eps(std::size_t i, int b) const;
  int f_star(std::size_t i, int b) const;  // tail of the i-string; total
  int e_star(std::size_t i, int b) const;  // head of the i-string; total
  std::vector<int> i_string(std::size_t i, int b) const;  // head to tail

  const std::vector<int>& highest_weight_elements() const { return highest_weight_; }
  bool is_connected() const;
  // The unique highest weight element of a connected graph with dominant top
  // weight; throws otherwise.
  int require_highest_weight() const;
  const Weight& highest_weight() const;

private:
  CartanData cartan_;
  std::vector<CrystalElement> elements_;
  std::vector<std::vector<int>> f_edge_;
  std::vector<std::vector<int>> e_edge_;
  std::vector<int> highest_weight_;
  std::unordered_map<std::string, int> id_index_;
};

// Builds the type A_{n-1} highest weight crystal on semistandard tableaux of
// the given partition shape with entries at most n.
CrystalGraph build_tableau_crystal(int n, const std::vector<int>& shape);

// A subset of one crystal's elements, kept sorted by element index.
struct SubsetHandle {
  const CrystalGraph* graph = nullptr;
  std::vector<int> members;

  bool contains(int b) const;
  std::vector<std::string> member_ids() const;  // sorted as strings
};

SubsetHandle make_subset(const CrystalGraph& g, std::vector<int> members);

// All members whose weight lies in the Weyl orbit of the highest weight,
// each with the minimal coset representative u such that u(lambda) = wt.
std::vector<std::pair<int, WeylElement>> extremal_elements(const CrystalGraph& g,
                                                           const WeylGroup& group);
std::vector<std::pair<int, WeylElement>> extremal_elements(const SubsetHandle& x,
                                                           const WeylGroup& group);

// Applies f_star along the word (first listed letter first).
int path_to_extremal(const CrystalGraph& g, int from, const std::vector<Node>& word);

// All f_star paths from one element to another in which every step strictly
// moves (the current weight pairs positively with the step's coroot).
// Returned words are in application order, sorted.
std::vector<std::vector<Node>> strict_starred_paths(const CrystalGraph& g, int from, int to);

}  // namespace cforge
