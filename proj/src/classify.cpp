#include "cforge/classify.hpp"

#include <algorithm>
#include <set>

namespace cforge {

namespace {

std::vector<std::string> ids_of(const CrystalGraph& g, const std::vector<int>& members) {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (int b : members) out.push_back(g.element(b).id);
  return out;
}

}  // namespace

bool is_extremal(const SubsetHandle& x, ExtremalWitness* witness) {
  const CrystalGraph& g = *x.graph;
  if (x.members.empty()) {
    if (witness) witness->note = "empty subset";
    return false;
  }
  for (std::size_t i = 0; i < g.cartan().rank(); ++i) {
    std::set<int> seen_heads;
    for (int b : x.members) {
      int head = g.e_star(i, b);
      if (!seen_heads.insert(head).second) continue;
      std::vector<int> string = g.i_string(i, head);
      std::vector<int> inter;
      for (int s : string) {
        if (x.contains(s)) inter.push_back(s);
      }
      bool whole = inter.size() == string.size();
      bool head_only = inter.size() == 1 && inter.front() == head;
      if (!whole && !head_only) {
        if (witness) {
          witness->i = g.cartan().label_of(i);
          witness->string_ids = ids_of(g, string);
          witness->intersection_ids = ids_of(g, inter);
          witness->note = "string meets the subset in a proper non-head part";
        }
        return false;
      }
    }
  }
  return true;
}

bool is_ideal_local(const SubsetHandle& x, const WeylGroup& group, IdealWitness* witness) {
  if (!is_extremal(x)) return false;
  const CrystalGraph& g = *x.graph;
  auto extremals = extremal_elements(x, group);
  for (const auto& [xb, u] : extremals) {
    for (const auto& [yb, v] : extremals) {
      if (u == v) continue;
      WeylElement z = group.multiply(v, group.inverse(u));
      if (z.length() + u.length() != v.length()) continue;  // no starred path x -> y
      for (const Word& rw : group.all_reduced_words(z)) {
        // rw multiplies left-to-right; starred steps apply its reverse.
        std::vector<Node> app;
        for (std::size_t k = rw.size(); k-- > 0;) app.push_back(g.cartan().label_of(rw[k]));
        if (path_to_extremal(g, xb, app) != yb)
          throw error("internal: reduced-word path missed its extremal target");
        std::vector<Node> dropped(app.begin() + 1, app.end());
        int end = path_to_extremal(g, xb, dropped);
        if (!x.contains(end)) {
          if (witness) {
            witness->from_id = g.element(xb).id;
            witness->to_id = g.element(yb).id;
            witness->full_path = app;
            witness->dropped_path = dropped;
            witness->escaped_id = g.element(end).id;
          }
          return false;
        }
      }
    }
  }
  return true;
}

LowerOrderIdeal recover_ideal(const SubsetHandle& x, const WeylGroup& group) {
  const CrystalGraph& g = *x.graph;
  if (x.members.empty()) throw error("recover_ideal: empty subset");
  std::vector<WeylElement> reps;
  for (const auto& [b, u] : extremal_elements(x, group)) reps.push_back(u);
  LowerOrderIdeal ideal = group.lower_ideal_close(reps);
  if (ideal_subset(g, group, ideal).members != x.members)
    throw error("recover_ideal: subset is not generated by a lower order ideal");
  return ideal;
}

bool is_ideal_global(const SubsetHandle& x, const WeylGroup& group) {
  if (!is_extremal(x)) return false;
  const CrystalGraph& g = *x.graph;
  const Weight lambda = g.highest_weight();
  std::vector<WeylElement> reps;
  for (const auto& [b, u] : extremal_elements(x, group)) reps.push_back(u);
  std::sort(reps.begin(), reps.end());
  // The representatives must be down-closed (up to taking representatives).
  for (const WeylElement& u : reps) {
    for (const WeylElement& below : group.lower_ideal_close({u}).elements) {
      WeylElement rep = group.min_coset_rep(below, lambda);
      if (!std::binary_search(reps.begin(), reps.end(), rep,
                              [](const WeylElement& a, const WeylElement& b) { return a < b; }))
        return false;
    }
  }
  return ideal_subset(g, group, group.lower_ideal_close(reps)).members == x.members;
}

std::pair<bool, std::optional<WeylElement>> is_principal(const SubsetHandle& x,
                                                         const WeylGroup& group,
                                                         PrincipalWitness* witness) {
  if (!is_extremal(x)) throw error("is_principal: subset is not extremal");
  std::vector<WeylElement> reps;
  for (const auto& [b, u] : extremal_elements(x, group)) reps.push_back(u);
  std::vector<WeylElement> maxima;
  for (const WeylElement& u : reps) {
    bool maximal = true;
    for (const WeylElement& v : reps) {
      if (!(u == v) && group.bruhat_leq(u, v)) {
        maximal = false;
        break;
      }
    }
    if (maximal) maxima.push_back(u);
  }
  std::sort(maxima.begin(), maxima.end());
  if (maxima.size() == 1) return {true, maxima.front()};
  if (witness) {
    for (const WeylElement& m : maxima) witness->maxima_words.push_back(group.to_labels(m));
  }
  return {false, std::nullopt};
}

std::pair<bool, std::optional<WeylElement>> is_demazure(const SubsetHandle& x,
                                                        const WeylGroup& group) {
  if (!is_extremal(x)) return {false, std::nullopt};
  if (!is_ideal_local(x, group)) return {false, std::nullopt};
  auto [principal, top] = is_principal(x, group);
  if (!principal) return {false, std::nullopt};
  if (demazure_crystal(*x.graph, group, *top).handle.members != x.members)
    throw error("internal: classified Demazure subset differs from the constructed one");
  return {true, top};
}

bool is_demazure_by_character(const SubsetHandle& x, const WeylGroup& group,
                              const WeylElement& w) {
  FormalCharacter expected = character(demazure_crystal(*x.graph, group, w).handle);
  if (!char_equal(character(x), expected))
    throw error("is_demazure_by_character: characters differ; the criterion does not apply");
  return is_ideal_local(x, group);
}

ClassifyReport classify(const SubsetHandle& x, const WeylGroup& group) {
  ClassifyReport report;
  ExtremalWitness ew;
  report.extremal = is_extremal(x, &ew);
  if (!report.extremal) {
    report.extremal_witness = std::move(ew);
    return report;
  }
  IdealWitness iw;
  report.ideal = is_ideal_local(x, group, &iw);
  if (!report.ideal) report.ideal_witness = std::move(iw);
  PrincipalWitness pw;
  auto [principal, top] = is_principal(x, group, &pw);
  report.principal = principal;
  if (principal) {
    report.max_rep = top;
  } else {
    report.principal_witness = std::move(pw);
  }
  if (report.ideal) report.generating_ideal = recover_ideal(x, group);
  report.demazure = report.ideal && report.principal;
  return report;
}

}  // namespace cforge
