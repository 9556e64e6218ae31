#include "cforge/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace cforge {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Node> parse_word_text(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  body = trim(body);
  std::vector<Node> word;
  if (body.empty() || body == "e") return word;
  for (const std::string& piece : split(body, ',')) {
    std::string p = trim(piece);
    if (p.empty()) throw error("empty letter in word \"" + text + "\"");
    try {
      word.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw error("bad letter \"" + p + "\" in word \"" + text + "\"");
    }
  }
  return word;
}

}  // namespace

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (long long v : w.coords()) out.push_back(v);
  return out;
}

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw error("weight must be a JSON array");
  std::vector<long long> coords;
  for (const auto& v : j) coords.push_back(v.get<long long>());
  return Weight(std::move(coords));
}

json word_to_json(const WeylGroup& group, const WeylElement& w) {
  json out = json::array();
  for (Node n : group.to_labels(w)) out.push_back(n);
  return out;
}

json cartan_to_json(const CartanData& c) {
  json out;
  out["index_set"] = c.index_set();
  json rows = json::array();
  for (std::size_t i = 0; i < c.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.rank(); ++j) row.push_back(c.entry(i, j));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

CartanData cartan_from_json(const nlohmann::json& j) {
  if (j.contains("type")) {
    std::string type = j.at("type").get<std::string>();
    if (type != "A") throw error("unsupported named type \"" + type + "\" (use a matrix)");
    return CartanData::type_a(j.at("rank").get<int>());
  }
  std::vector<Node> labels = j.at("index_set").get<std::vector<Node>>();
  std::vector<std::vector<long long>> matrix;
  for (const auto& row : j.at("matrix")) matrix.push_back(row.get<std::vector<long long>>());
  return CartanData(std::move(labels), std::move(matrix));
}

json crystal_to_json(const CrystalGraph& g) {
  json out;
  out["cartan"] = cartan_to_json(g.cartan());
  json elements = json::array();
  for (std::size_t b = 0; b < g.size(); ++b) {
    json el;
    el["id"] = g.element(static_cast<int>(b)).id;
    el["wt"] = weight_to_json(g.element(static_cast<int>(b)).wt);
    elements.push_back(std::move(el));
  }
  out["elements"] = std::move(elements);
  json edges = json::array();
  for (std::size_t b = 0; b < g.size(); ++b) {
    for (std::size_t i = 0; i < g.cartan().rank(); ++i) {
      int dst = g.f(i, static_cast<int>(b));
      if (dst < 0) continue;
      json edge;
      edge["src"] = g.element(static_cast<int>(b)).id;
      edge["i"] = g.cartan().label_of(i);
      edge["dst"] = g.element(dst).id;
      edges.push_back(std::move(edge));
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

CrystalGraph crystal_from_json(const nlohmann::json& j) {
  CartanData cartan = cartan_from_json(j.at("cartan"));
  std::vector<CrystalElement> elements;
  for (const auto& el : j.at("elements")) {
    elements.push_back({el.at("id").get<std::string>(), weight_from_json(el.at("wt"))});
  }
  std::vector<CrystalEdgeSpec> edges;
  for (const auto& edge : j.at("edges")) {
    edges.push_back({edge.at("src").get<std::string>(), edge.at("i").get<Node>(),
                     edge.at("dst").get<std::string>()});
  }
  return CrystalGraph(std::move(cartan), std::move(elements), edges);
}

json subset_to_json(const SubsetHandle& x, json provenance) {
  json out;
  out["members"] = x.member_ids();
  out["provenance"] = std::move(provenance);
  return out;
}

SubsetHandle subset_from_json(const CrystalGraph& g, const nlohmann::json& j) {
  std::vector<int> members;
  for (const auto& id : j.at("members")) {
    auto b = g.index_of(id.get<std::string>());
    if (!b) throw error("subset member \"" + id.get<std::string>() + "\" is not in the crystal");
    members.push_back(*b);
  }
  return make_subset(g, std::move(members));
}

json character_to_json(const FormalCharacter& ch) {
  json terms = json::array();
  for (const auto& [w, mult] : ch.terms()) {
    json term;
    term["wt"] = weight_to_json(w);
    term["mult"] = mult;
    terms.push_back(std::move(term));
  }
  json out;
  out["terms"] = std::move(terms);
  return out;
}

json report_to_json(const ClassifyReport& report, const WeylGroup& group) {
  json out;
  out["extremal"] = report.extremal;
  out["ideal"] = report.ideal;
  out["principal"] = report.principal;
  out["demazure"] = report.demazure;
  if (report.max_rep) out["w"] = word_to_json(group, *report.max_rep);
  if (report.generating_ideal) {
    json gens = json::array();
    for (const WeylElement& g : report.generating_ideal->generators)
      gens.push_back(word_to_json(group, g));
    out["ideal_generators"] = std::move(gens);
  }
  if (report.extremal_witness) {
    json w;
    w["kind"] = "string";
    if (report.extremal_witness->note == "empty subset") {
      w["note"] = report.extremal_witness->note;
    } else {
      w["i"] = report.extremal_witness->i;
      w["string"] = report.extremal_witness->string_ids;
      w["intersection"] = report.extremal_witness->intersection_ids;
    }
    out["witness"] = std::move(w);
  } else if (report.ideal_witness) {
    json w;
    w["kind"] = "path";
    w["from"] = report.ideal_witness->from_id;
    w["to"] = report.ideal_witness->to_id;
    w["path"] = report.ideal_witness->full_path;
    w["dropped_path"] = report.ideal_witness->dropped_path;
    w["escaped"] = report.ideal_witness->escaped_id;
    out["witness"] = std::move(w);
  } else if (report.principal_witness) {
    json w;
    w["kind"] = "maxima";
    w["maxima"] = report.principal_witness->maxima_words;
    out["witness"] = std::move(w);
  }
  return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const CrystalGraph& g, const WeylGroup& group, const SubsetHandle* subset) {
  std::vector<char> extremal(g.size(), 0);
  if (g.highest_weight_elements().size() == 1 && g.is_connected()) {
    for (const auto& [b, u] : extremal_elements(g, group)) extremal[static_cast<std::size_t>(b)] = 1;
  }
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  rankdir=TB;\n";
  for (std::size_t b = 0; b < g.size(); ++b) {
    out << "  n" << b << " [label=\"" << g.element(static_cast<int>(b)).wt.to_string() << "\""
        << ", shape=" << (extremal[b] ? "doublecircle" : "circle");
    if (subset && subset->contains(static_cast<int>(b)))
      out << ", style=filled, fillcolor=gray85";
    out << "];\n";
  }
  for (std::size_t b = 0; b < g.size(); ++b) {
    for (std::size_t i = 0; i < g.cartan().rank(); ++i) {
      int dst = g.f(i, static_cast<int>(b));
      if (dst < 0) continue;
      out << "  n" << b << " -> n" << dst << " [label=\"" << g.cartan().label_of(i) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

SubsetHandle parse_subset_spec(const CrystalGraph& g, const WeylGroup& group,
                               const std::string& spec) {
  std::vector<int> members;
  for (const std::string& raw_item : split(spec, ';')) {
    std::string item = trim(raw_item);
    if (item.empty()) continue;
    if (item == "hw" || item == "@hw") {
      members.push_back(g.require_highest_weight());
      continue;
    }
    if (item.rfind("demazure", 0) == 0) {
      std::vector<Node> word = parse_word_text(item.substr(8));
      for (int b : demazure_crystal(g, group, group.from_labels(word)).handle.members)
        members.push_back(b);
      continue;
    }
    if (item.rfind("ideal", 0) == 0) {
      std::string body = trim(item.substr(5));
      std::vector<WeylElement> gens;
      // generator words are bracket groups separated by commas
      std::size_t pos = 0;
      while (pos < body.size()) {
        std::size_t open = body.find('[', pos);
        if (open == std::string::npos) break;
        std::size_t close = body.find(']', open);
        if (close == std::string::npos) throw error("unbalanced '[' in ideal spec");
        gens.push_back(group.from_labels(parse_word_text(body.substr(open, close - open + 1))));
        pos = close + 1;
      }
      if (gens.empty()) throw error("ideal spec lists no generator words");
      for (int b : ideal_subset(g, group, group.lower_ideal_close(gens)).members)
        members.push_back(b);
      continue;
    }
    if (item.rfind("id:", 0) == 0) {
      std::string id = trim(item.substr(3));
      auto b = g.index_of(id);
      if (!b) throw error("no element with id \"" + id + "\"");
      members.push_back(*b);
      continue;
    }
    if (item.find('@') != std::string::npos) {
      // A lowering path: op tokens then an anchor, rightmost op applied first.
      std::istringstream in(item);
      std::vector<std::string> tokens;
      std::string tok;
      while (in >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens.back().front() != '@')
        throw error("path item must end with an anchor: \"" + item + "\"");
      std::string anchor = tokens.back().substr(1);
      int cur;
      if (anchor == "hw") {
        cur = g.require_highest_weight();
      } else {
        auto b = g.index_of(anchor);
        if (!b) throw error("no element with id \"" + anchor + "\"");
        cur = *b;
      }
      for (std::size_t k = tokens.size() - 1; k-- > 0;) {
        const std::string& op = tokens[k];
        if (op.size() < 2 || op[0] != 'f')
          throw error("bad op \"" + op + "\" in path item \"" + item + "\" (only f<i> allowed)");
        Node label;
        try {
          label = std::stoi(op.substr(1));
        } catch (const std::exception&) {
          throw error("bad op \"" + op + "\" in path item \"" + item + "\"");
        }
        std::size_t i = g.cartan().index_of(label);
        int next = g.f(i, cur);
        if (next < 0)
          throw error("path \"" + item + "\": step " + op + " from \"" + g.element(cur).id +
                      "\" falls off the crystal (phi_" + std::to_string(label) + " = 0 there)");
        cur = next;
      }
      members.push_back(cur);
      continue;
    }
    // Fall back to a verbatim element id.
    auto b = g.index_of(item);
    if (!b) throw error("unrecognized subset item \"" + item + "\"");
    members.push_back(*b);
  }
  if (members.empty()) throw error("subset spec resolves to no elements");
  return make_subset(g, std::move(members));
}

}  // namespace cforge
