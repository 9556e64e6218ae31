#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cforge/classify.hpp"
#include "cforge/crystal.hpp"

namespace cforge::verify {

struct SuiteOptions {
  std::string type = "A";
  int rank = 2;
  std::vector<int> shape = {2, 1};
  // Largest crystal allowed in 2^n subset sweeps unless force is set.
  std::size_t element_cap = 20;
  bool force = false;
  std::uint64_t seed = 20240801;
  int samples = 1000;
  std::size_t weyl_cap = 1'000'000;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::vector<std::string> claims;
};

const std::vector<SuiteInfo>& suites();
bool has_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<SuiteResult> run_all(const SuiteOptions& opts);

// Hand-built rank-2 sample crystals outside type A, used by several suites
// and available to the CLI as loadable documents.
CrystalGraph sample_b2_vector_crystal();
CrystalGraph sample_b2_spin_crystal();

// All nonempty Bruhat-down-closed subsets of the listed elements.
std::vector<std::vector<WeylElement>> nonempty_lower_ideals(const WeylGroup& group,
                                                            const std::vector<WeylElement>& all);

}  // namespace cforge::verify
