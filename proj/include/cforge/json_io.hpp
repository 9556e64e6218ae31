#pragma once

#include <string>

#include <json.hpp>

#include "cforge/classify.hpp"
#include "cforge/crystal.hpp"

namespace cforge {

// All writers emit fields in a fixed order so that serialization is
// canonical: identical objects produce byte-identical text.
using json = nlohmann::ordered_json;

json cartan_to_json(const CartanData& c);
// Accepts either {"index_set":[...],"matrix":[[...]]} or {"type":"A","rank":n}.
CartanData cartan_from_json(const nlohmann::json& j);

json crystal_to_json(const CrystalGraph& g);
CrystalGraph crystal_from_json(const nlohmann::json& j);

json subset_to_json(const SubsetHandle& x, json provenance);
SubsetHandle subset_from_json(const CrystalGraph& g, const nlohmann::json& j);

json character_to_json(const FormalCharacter& ch);

json report_to_json(const ClassifyReport& report, const WeylGroup& group);

json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);
json word_to_json(const WeylGroup& group, const WeylElement& w);

// 2-space indent plus trailing newline; the one dump used everywhere.
std::string dump_json(const json& j);

// Graphviz text: nodes labeled by weight, extremal nodes double-circled,
// subset members filled, edges labeled by node label.
std::string to_dot(const CrystalGraph& g, const WeylGroup& group,
                   const SubsetHandle* subset = nullptr);

// Subset spec mini-language.  Items are separated by ';':
//   hw | @hw                  the highest weight element
//   f2 f1 @hw                 a lowering path, rightmost op applied first
//   id:RAW                    an element named verbatim
//   demazure [2,1]            a whole Demazure subset by reduced word
//   ideal [1,2],[2,1]         an ideal subset by generator words
// The result is the union over items.
SubsetHandle parse_subset_spec(const CrystalGraph& g, const WeylGroup& group,
                               const std::string& spec);

}  // namespace cforge
