#include "cforge/crystal.hpp"

#include <algorithm>
#include <sstream>

namespace cforge {

namespace {

struct Signature {
  std::vector<std::size_t> plus;   // surviving '+' positions, ascending
  std::vector<std::size_t> minus;  // surviving '-' positions, ascending
};

// One left-to-right pass: a '-' cancels the nearest surviving '+' to its left.
Signature scan_signature(const std::vector<ReadingEntry>& word, int i) {
  Signature sig;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p].letter == i) {
      sig.plus.push_back(p);
    } else if (word[p].letter == i + 1) {
      if (!sig.plus.empty()) {
        sig.plus.pop_back();
      } else {
        sig.minus.push_back(p);
      }
    }
  }
  return sig;
}

void validate_partition(int n, const std::vector<int>& shape) {
  if (n < 2) throw error("tableau crystal needs n >= 2");
  if (static_cast<int>(shape.size()) > n)
    throw error("partition has more than n parts; not a dominant weight for this rank");
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (shape[k] < 0 || (k > 0 && shape[k] > shape[k - 1]))
      throw error("shape is not a partition (weakly decreasing nonnegative parts required)");
  }
}

void fill_cells(const std::vector<int>& shape, std::vector<std::vector<int>>& rows, int n,
                std::size_t row, std::size_t col, std::vector<Tableau>& out) {
  if (row == shape.size()) {
    out.push_back(Tableau{rows});
    return;
  }
  std::size_t next_row = row, next_col = col + 1;
  if (static_cast<int>(next_col) >= shape[row]) {
    next_row = row + 1;
    next_col = 0;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, rows[row][col - 1]);
  if (row > 0 && static_cast<int>(col) < shape[row - 1]) lo = std::max(lo, rows[row - 1][col] + 1);
  for (int v = lo; v <= n; ++v) {
    rows[row][col] = v;
    fill_cells(shape, rows, n, next_row, next_col, out);
  }
}

}  // namespace

bool Tableau::is_semistandard(int n) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1 || v > n) return false;
      if (c > 0 && rows[r][c - 1] > v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::content(int n) const {
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  for (const auto& row : rows) {
    for (int v : row) ++m[static_cast<std::size_t>(v - 1)];
  }
  return m;
}

Weight Tableau::weight(int n) const {
  std::vector<int> m = content(n);
  std::vector<long long> coords(static_cast<std::size_t>(n - 1));
  for (int k = 0; k + 1 < n; ++k) coords[static_cast<std::size_t>(k)] = m[k] - m[k + 1];
  return Weight(std::move(coords));
}

std::string Tableau::id() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out << ',';
      out << rows[r][c];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::vector<Tableau> semistandard_tableaux(int n, const std::vector<int>& shape) {
  validate_partition(n, shape);
  std::vector<int> parts;
  for (int p : shape) {
    if (p > 0) parts.push_back(p);
  }
  std::vector<Tableau> out;
  if (parts.empty()) {
    out.push_back(Tableau{});
    return out;
  }
  std::vector<std::vector<int>> rows;
  for (int p : parts) rows.emplace_back(static_cast<std::size_t>(p), 0);
  fill_cells(parts, rows, n, 0, 0, out);
  return out;
}

Tableau superstandard_tableau(const std::vector<int>& shape) {
  Tableau t;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] <= 0) continue;
    t.rows.emplace_back(static_cast<std::size_t>(shape[r]), static_cast<int>(r + 1));
  }
  return t;
}

std::vector<ReadingEntry> reading_word(const Tableau& t) {
  int max_cols = 0;
  for (const auto& row : t.rows) max_cols = std::max(max_cols, static_cast<int>(row.size()));
  std::vector<ReadingEntry> out;
  for (int c = max_cols - 1; c >= 0; --c) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (c < static_cast<int>(t.rows[r].size()))
        out.push_back({t.rows[r][static_cast<std::size_t>(c)], static_cast<int>(r), c});
    }
  }
  return out;
}

std::optional<Tableau> tableau_f(const Tableau& t, int i) {
  auto word = reading_word(t);
  Signature sig = scan_signature(word, i);
  if (sig.plus.empty()) return std::nullopt;
  const ReadingEntry& cell = word[sig.plus.front()];
  Tableau out = t;
  out.rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = i + 1;
  return out;
}

std::optional<Tableau> tableau_e(const Tableau& t, int i) {
  auto word = reading_word(t);
  Signature sig = scan_signature(word, i);
  if (sig.minus.empty()) return std::nullopt;
  const ReadingEntry& cell = word[sig.minus.back()];
  Tableau out = t;
  out.rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = i;
  return out;
}

int tableau_phi(const Tableau& t, int i) {
  return static_cast<int>(scan_signature(reading_word(t), i).plus.size());
}

int tableau_eps(const Tableau& t, int i) {
  return static_cast<int>(scan_signature(reading_word(t), i).minus.size());
}

CrystalGraph::CrystalGraph(CartanData cartan, std::vector<CrystalElement> elements,
                           const std::vector<CrystalEdgeSpec>& edges)
    : cartan_(std::move(cartan)), elements_(std::move(elements)) {
  std::size_t n = elements_.size();
  std::size_t r = cartan_.rank();
  if (n == 0) throw error("crystal has no elements");
  for (std::size_t b = 0; b < n; ++b) {
    if (elements_[b].id.empty()) throw error("empty element id");
    if (elements_[b].wt.rank() != r)
      throw error("element \"" + elements_[b].id + "\" has a weight of the wrong rank");
    if (!id_index_.emplace(elements_[b].id, static_cast<int>(b)).second)
      throw error("duplicate element id \"" + elements_[b].id + "\"");
  }
  f_edge_.assign(n, std::vector<int>(r, -1));
  e_edge_.assign(n, std::vector<int>(r, -1));
  for (const CrystalEdgeSpec& edge : edges) {
    auto src = index_of(edge.src);
    auto dst = index_of(edge.dst);
    if (!src) throw error("edge references unknown element id \"" + edge.src + "\"");
    if (!dst) throw error("edge references unknown element id \"" + edge.dst + "\"");
    std::size_t i = cartan_.index_of(edge.i);
    if (f_edge_[static_cast<std::size_t>(*src)][i] != -1)
      throw axiom_error('a', edge.src, edge.i, "two outgoing f-edges");
    if (e_edge_[static_cast<std::size_t>(*dst)][i] != -1)
      throw axiom_error('a', edge.dst, edge.i, "two incoming f-edges");
    f_edge_[static_cast<std::size_t>(*src)][i] = *dst;
    e_edge_[static_cast<std::size_t>(*dst)][i] = *src;
  }

  for (std::size_t i = 0; i < r; ++i) {
    Node label = cartan_.label_of(i);
    Weight alpha = cartan_.simple_root(i);
    for (std::size_t b = 0; b < n; ++b) {
      // (c): walking f must terminate.
      int cur = static_cast<int>(b);
      std::size_t steps = 0;
      while (f_edge_[static_cast<std::size_t>(cur)][i] >= 0) {
        cur = f_edge_[static_cast<std::size_t>(cur)][i];
        if (++steps > n) throw axiom_error('c', elements_[b].id, label, "infinite i-string");
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      int dst = f_edge_[b][i];
      if (dst < 0) continue;
      // (b): the step must lower the weight by alpha_i.
      if (!(elements_[b].wt - alpha == elements_[static_cast<std::size_t>(dst)].wt))
        throw axiom_error('b', elements_[b].id, label,
                          "weight change of the f-edge is not -alpha_i");
    }
    for (std::size_t b = 0; b < n; ++b) {
      long long lhs = phi(i, static_cast<int>(b));
      long long rhs = elements_[b].wt[i] + eps(i, static_cast<int>(b));
      if (lhs != rhs)
        throw axiom_error('d', elements_[b].id, label,
                          "phi = " + std::to_string(lhs) + " but <alpha_i^vee,wt> + eps = " +
                              std::to_string(rhs));
    }
  }

  for (std::size_t b = 0; b < n; ++b) {
    bool source = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (e_edge_[b][i] >= 0) {
        source = false;
        break;
      }
    }
    if (source) highest_weight_.push_back(static_cast<int>(b));
  }
}

std::optional<int> CrystalGraph::index_of(const std::string& id) const {
  auto it = id_index_.find(id);
  if (it == id_index_.end()) return std::nullopt;
  return it->second;
}

int CrystalGraph::phi(std::size_t i, int b) const {
  int k = 0;
  while (f(i, b) >= 0) {
    b = f(i, b);
    ++k;
  }
  return k;
}

int CrystalGraph::eps(std::size_t i, int b) const {
  int k = 0;
  while (e(i, b) >= 0) {
    b = e(i, b);
    ++k;
  }
  return k;
}

int CrystalGraph::f_star(std::size_t i, int b) const {
  while (f(i, b) >= 0) b = f(i, b);
  return b;
}

int CrystalGraph::e_star(std::size_t i, int b) const {
  while (e(i, b) >= 0) b = e(i, b);
  return b;
}

std::vector<int> CrystalGraph::i_string(std::size_t i, int b) const {
  std::vector<int> out;
  int cur = e_star(i, b);
  out.push_back(cur);
  while (f(i, cur) >= 0) {
    cur = f(i, cur);
    out.push_back(cur);
  }
  return out;
}

bool CrystalGraph::is_connected() const {
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < cartan_.rank(); ++i) {
      for (int nb : {f(i, b), e(i, b)}) {
        if (nb >= 0 && !seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = 1;
          stack.push_back(nb);
          ++count;
        }
      }
    }
  }
  return count == size();
}

int CrystalGraph::require_highest_weight() const {
  if (highest_weight_.size() != 1)
    throw error("not a highest-weight crystal: " + std::to_string(highest_weight_.size()) +
                " source elements");
  if (!is_connected()) throw error("not a highest-weight crystal: graph is disconnected");
  int hw = highest_weight_.front();
  if (!cartan_.is_dominant(elements_[static_cast<std::size_t>(hw)].wt))
    throw error("not a highest-weight crystal: top weight is not dominant");
  return hw;
}

const Weight& CrystalGraph::highest_weight() const {
  return elements_[static_cast<std::size_t>(require_highest_weight())].wt;
}

CrystalGraph build_tableau_crystal(int n, const std::vector<int>& shape) {
  validate_partition(n, shape);
  std::vector<Tableau> tabs = semistandard_tableaux(n, shape);
  std::vector<CrystalElement> elements;
  elements.reserve(tabs.size());
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    std::string id = tabs[k].id();
    index.emplace(id, static_cast<int>(k));
    elements.push_back({std::move(id), tabs[k].weight(n)});
  }
  std::vector<CrystalEdgeSpec> edges;
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    for (int i = 1; i < n; ++i) {
      auto img = tableau_f(tabs[k], i);
      if (!img) continue;
      auto it = index.find(img->id());
      if (it == index.end()) throw error("internal: f-image is not semistandard");
      edges.push_back({elements[k].id, i, elements[static_cast<std::size_t>(it->second)].id});
    }
  }
  return CrystalGraph(CartanData::type_a(n - 1), std::move(elements), edges);
}

bool SubsetHandle::contains(int b) const {
  return std::binary_search(members.begin(), members.end(), b);
}

std::vector<std::string> SubsetHandle::member_ids() const {
  std::vector<std::string> ids;
  ids.reserve(members.size());
  for (int b : members) ids.push_back(graph->element(b).id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

SubsetHandle make_subset(const CrystalGraph& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int b : members) {
    if (b < 0 || static_cast<std::size_t>(b) >= g.size())
      throw error("subset member index out of range");
  }
  return SubsetHandle{&g, std::move(members)};
}

namespace {

std::vector<std::pair<int, WeylElement>> extremal_impl(const CrystalGraph& g,
                                                       const WeylGroup& group,
                                                       const std::vector<int>* members) {
  if (!(group.cartan() == g.cartan())) throw error("Weyl group and crystal Cartan data differ");
  int hw = g.require_highest_weight();
  const Weight& lambda = g.element(hw).wt;
  std::vector<std::pair<int, WeylElement>> out;
  std::unordered_map<Weight, int, WeightHash> seen;
  auto consider = [&](int b) {
    auto u = group.orbit_element(g.element(b).wt, lambda);
    if (!u) return;
    if (!seen.emplace(g.element(b).wt, b).second)
      throw error("extremal weight " + g.element(b).wt.to_string() +
                  " has multiplicity > 1; not a highest-weight crystal");
    out.emplace_back(b, std::move(*u));
  };
  if (members) {
    for (int b : *members) consider(b);
  } else {
    for (std::size_t b = 0; b < g.size(); ++b) consider(static_cast<int>(b));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::vector<std::pair<int, WeylElement>> extremal_elements(const CrystalGraph& g,
                                                           const WeylGroup& group) {
  return extremal_impl(g, group, nullptr);
}

std::vector<std::pair<int, WeylElement>> extremal_elements(const SubsetHandle& x,
                                                           const WeylGroup& group) {
  return extremal_impl(*x.graph, group, &x.members);
}

int path_to_extremal(const CrystalGraph& g, int from, const std::vector<Node>& word) {
  int cur = from;
  for (Node label : word) cur = g.f_star(g.cartan().index_of(label), cur);
  return cur;
}

std::vector<std::vector<Node>> strict_starred_paths(const CrystalGraph& g, int from, int to) {
  std::vector<std::vector<Node>> out;
  std::vector<Node> word;
  auto rec = [&](auto&& self, int cur) -> void {
    if (cur == to) out.push_back(word);
    for (std::size_t i = 0; i < g.cartan().rank(); ++i) {
      if (g.element(cur).wt[i] <= 0) continue;  // step would not strictly move
      word.push_back(g.cartan().label_of(i));
      self(self, g.f_star(i, cur));
      word.pop_back();
    }
  };
  rec(rec, from);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cforge
