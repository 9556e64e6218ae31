#pragma once

#include <stdexcept>
#include <string>

namespace cforge {

// Base class for all input and consistency errors thrown by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A crystal document failed one of the defining axioms (a)-(d).
// Carries which axiom, at which element, for which Dynkin node.
class axiom_error : public error {
public:
  axiom_error(char axiom, std::string element, int node, const std::string& detail)
      : error(std::string("axiom (") + axiom + ") violated at element \"" + element +
              "\" for i=" + std::to_string(node) + ": " + detail),
        axiom_(axiom),
        element_(std::move(element)),
        node_(node) {}

  char axiom() const { return axiom_; }
  const std::string& element() const { return element_; }
  int node() const { return node_; }

private:
  char axiom_;
  std::string element_;
  int node_;
};

}  // namespace cforge
