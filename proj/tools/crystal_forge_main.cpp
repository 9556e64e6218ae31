// crystal-forge: build, inspect, and classify subsets of highest weight
// crystals, and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cforge/json_io.hpp"
#include "cforge/verify.hpp"

namespace {

using cforge::CrystalGraph;
using cforge::error;
using cforge::Node;
using cforge::SubsetHandle;
using cforge::WeylGroup;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) continue;
    out.push_back(std::stoi(cur));
  }
  return out;
}

std::vector<std::vector<Node>> parse_generator_lists(const std::string& text) {
  std::vector<std::vector<Node>> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ';')) {
    std::size_t a = piece.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::string body = piece.substr(a);
    if (!body.empty() && body.front() == '[') body = body.substr(1, body.find(']') - 1);
    if (body == "e") body = "";
    std::vector<Node> word;
    for (int v : parse_int_list(body)) word.push_back(v);
    out.push_back(std::move(word));
  }
  if (out.empty()) throw error("no generator words given");
  return out;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open \"" + path + "\"");
  nlohmann::json j;
  in >> j;
  return j;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write \"" + path + "\"");
  out << text;
}

CrystalGraph load_crystal(const std::string& path) {
  if (path == "@b2-vector") return cforge::verify::sample_b2_vector_crystal();
  if (path == "@b2-spin") return cforge::verify::sample_b2_spin_crystal();
  return cforge::crystal_from_json(read_json_file(path));
}

cforge::LowerOrderIdeal ideal_from_text(const WeylGroup& group, const std::string& text) {
  std::vector<cforge::WeylElement> gens;
  for (const auto& word : parse_generator_lists(text)) gens.push_back(group.from_labels(word));
  return group.lower_ideal_close(gens);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crystal combinatorics toolkit"};
  app.require_subcommand(1);

  std::string crystal_path, subset_path, out_path, spec_text, word_text, gens_text;
  std::string lhs_text, rhs_text;
  bool monomials = false;

  auto* build = app.add_subcommand("build", "build a type A tableau crystal");
  std::string type = "A";
  int rank = 2;
  std::string hw_text = "2,1";
  build->add_option("--type", type, "Cartan type (A)");
  build->add_option("--rank", rank, "rank of the type A root system")->required();
  build->add_option("--hw", hw_text, "highest weight as a partition, e.g. 2,1")->required();
  build->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* load = app.add_subcommand("load", "validate a crystal file and reprint it canonically");
  load->add_option("-i,--crystal", crystal_path, "crystal JSON file")->required();
  load->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* subset = app.add_subcommand("subset", "resolve a subset spec to element ids");
  subset->add_option("-i,--crystal", crystal_path)->required();
  subset->add_option("--spec", spec_text, "e.g. \"hw; f1 @hw; f2 @hw\"")->required();
  subset->add_option("-o,--out", out_path);

  auto* demazure = app.add_subcommand("demazure", "the Demazure subset of a reduced word");
  demazure->add_option("-i,--crystal", crystal_path)->required();
  demazure->add_option("-w,--word", word_text, "word, e.g. 2,1 (e for the identity)")
      ->required();
  demazure->add_option("-o,--out", out_path);

  auto* ideal = app.add_subcommand("ideal", "the union subset of a lower order ideal");
  ideal->add_option("-i,--crystal", crystal_path)->required();
  ideal->add_option("-g,--generators", gens_text, "generator words, e.g. \"1,2; 2,1\"")
      ->required();
  ideal->add_option("-o,--out", out_path);

  auto* atoms = app.add_subcommand("atoms", "atom decomposition of an ideal subset");
  atoms->add_option("-i,--crystal", crystal_path)->required();
  atoms->add_option("-w,--word", word_text, "principal ideal by reduced word");
  atoms->add_option("-g,--generators", gens_text, "or generator words");
  atoms->add_option("-o,--out", out_path);

  auto* classify = app.add_subcommand("classify", "classification report for a subset");
  classify->add_option("-i,--crystal", crystal_path)->required();
  classify->add_option("-s,--subset", subset_path, "subset JSON file")->required();
  classify->add_option("-o,--out", out_path);

  auto* character = app.add_subcommand("character", "formal character of a subset");
  character->add_option("-i,--crystal", crystal_path)->required();
  character->add_option("-s,--subset", subset_path)->required();
  character->add_flag("--monomials", monomials, "append the type A monomial rendering");
  character->add_option("-o,--out", out_path);

  auto* intersect = app.add_subcommand("intersect", "intersection of two ideal subsets");
  intersect->add_option("-i,--crystal", crystal_path)->required();
  intersect->add_option("--lhs", lhs_text, "generator words of the first ideal")->required();
  intersect->add_option("--rhs", rhs_text, "generator words of the second ideal")->required();
  intersect->add_option("-o,--out", out_path);

  auto* exportdot = app.add_subcommand("export-dot", "Graphviz rendering");
  exportdot->add_option("-i,--crystal", crystal_path)->required();
  exportdot->add_option("-s,--subset", subset_path, "optional subset overlay");
  exportdot->add_option("-o,--out", out_path);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite_name = "all";
  cforge::verify::SuiteOptions vopts;
  bool list_suites = false;
  verify->add_option("suite", suite_name, "suite name or 'all'");
  verify->add_option("--type", vopts.type, "instance Cartan type (A)");
  verify->add_option("--rank", vopts.rank, "instance rank");
  std::string vhw = "2,1";
  verify->add_option("--hw", vhw, "instance highest weight partition");
  verify->add_option("--cap", vopts.element_cap, "max crystal size for exhaustive sweeps");
  verify->add_flag("--force", vopts.force, "run sweeps past the cap");
  verify->add_option("--seed", vopts.seed, "seed for sampled checks");
  verify->add_option("--samples", vopts.samples, "sample count for large instances");
  verify->add_flag("--list", list_suites, "list suites and the claims they cover");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      if (type != "A") throw error("only type A crystals can be built; load others from JSON");
      CrystalGraph g = cforge::build_tableau_crystal(rank + 1, parse_int_list(hw_text));
      write_output(out_path, cforge::dump_json(cforge::crystal_to_json(g)));
    } else if (load->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      write_output(out_path, cforge::dump_json(cforge::crystal_to_json(g)));
    } else if (subset->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      SubsetHandle x = cforge::parse_subset_spec(g, group, spec_text);
      cforge::json prov;
      prov["kind"] = "spec";
      prov["spec"] = spec_text;
      write_output(out_path, cforge::dump_json(cforge::subset_to_json(x, std::move(prov))));
    } else if (demazure->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      std::vector<Node> word;
      if (word_text != "e") {
        for (int v : parse_int_list(word_text)) word.push_back(v);
      }
      auto d = cforge::demazure_crystal(g, group, group.from_labels(word));
      cforge::json prov;
      prov["kind"] = "demazure";
      prov["w"] = cforge::word_to_json(group, d.w);
      write_output(out_path,
                   cforge::dump_json(cforge::subset_to_json(d.handle, std::move(prov))));
    } else if (ideal->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      auto I = ideal_from_text(group, gens_text);
      SubsetHandle x = cforge::ideal_subset(g, group, I);
      cforge::json prov;
      prov["kind"] = "ideal";
      cforge::json gens = cforge::json::array();
      for (const auto& w : I.generators) gens.push_back(cforge::word_to_json(group, w));
      prov["generators"] = std::move(gens);
      write_output(out_path, cforge::dump_json(cforge::subset_to_json(x, std::move(prov))));
    } else if (atoms->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      cforge::LowerOrderIdeal I;
      if (!gens_text.empty()) {
        I = ideal_from_text(group, gens_text);
      } else if (!word_text.empty()) {
        std::vector<Node> word;
        if (word_text != "e") {
          for (int v : parse_int_list(word_text)) word.push_back(v);
        }
        I = group.lower_ideal_close({group.from_labels(word)});
      } else {
        throw error("atoms: give --word or --generators");
      }
      cforge::json out = cforge::json::array();
      for (const auto& [w, ch] : cforge::atom_character_table(g, group, I)) {
        auto atom = cforge::demazure_atom(g, group, w);
        cforge::json entry;
        entry["w"] = cforge::word_to_json(group, w);
        entry["members"] = atom.handle.member_ids();
        entry["character"] = cforge::character_to_json(ch);
        out.push_back(std::move(entry));
      }
      cforge::json doc;
      doc["atoms"] = std::move(out);
      write_output(out_path, cforge::dump_json(doc));
    } else if (classify->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      SubsetHandle x = cforge::subset_from_json(g, read_json_file(subset_path));
      auto report = cforge::classify(x, group);
      write_output(out_path, cforge::dump_json(cforge::report_to_json(report, group)));
    } else if (character->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      SubsetHandle x = cforge::subset_from_json(g, read_json_file(subset_path));
      auto ch = cforge::character(x);
      cforge::json doc = cforge::character_to_json(ch);
      if (monomials)
        doc["monomials"] = cforge::monomial_string(ch, static_cast<int>(g.cartan().rank()) + 1);
      write_output(out_path, cforge::dump_json(doc));
    } else if (intersect->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      auto I = ideal_from_text(group, lhs_text);
      auto J = ideal_from_text(group, rhs_text);
      SubsetHandle x = cforge::ideal_intersection(g, group, I, J);
      auto K = cforge::intersect_ideals(group, I, J);
      cforge::json prov;
      prov["kind"] = "intersection";
      cforge::json gens = cforge::json::array();
      for (const auto& w : K.generators) gens.push_back(cforge::word_to_json(group, w));
      prov["generators"] = std::move(gens);
      write_output(out_path, cforge::dump_json(cforge::subset_to_json(x, std::move(prov))));
    } else if (exportdot->parsed()) {
      CrystalGraph g = load_crystal(crystal_path);
      WeylGroup group(g.cartan());
      if (!subset_path.empty()) {
        SubsetHandle x = cforge::subset_from_json(g, read_json_file(subset_path));
        write_output(out_path, cforge::to_dot(g, group, &x));
      } else {
        write_output(out_path, cforge::to_dot(g, group));
      }
    } else if (verify->parsed()) {
      if (list_suites) {
        for (const auto& info : cforge::verify::suites()) {
          std::cout << info.name << ": " << info.description << " [";
          for (std::size_t k = 0; k < info.claims.size(); ++k) {
            if (k) std::cout << ", ";
            std::cout << info.claims[k];
          }
          std::cout << "]\n";
        }
        return 0;
      }
      vopts.shape = parse_int_list(vhw);
      if (const char* cap = std::getenv("CRYSTAL_FORGE_CAP")) {
        vopts.element_cap = static_cast<std::size_t>(std::stoull(cap));
      }
      std::vector<cforge::verify::SuiteResult> results;
      if (suite_name == "all") {
        results = cforge::verify::run_all(vopts);
      } else {
        results.push_back(cforge::verify::run_suite(suite_name, vopts));
      }
      int failures = 0;
      for (const auto& res : results) {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.summary
                  << "\n";
        for (const auto& f : res.failures) std::cout << "       " << f << "\n";
        if (!res.pass) ++failures;
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
