#ifndef FIBERBOUND_TOOLS_VERIFY_HPP
#define FIBERBOUND_TOOLS_VERIFY_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "fiberbound/poly.hpp"

namespace fiberbound::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;  // empty when the computation failed
  std::string error;   // set when the computation failed
  bool passed = false;
};

/// The golden checks, computed from the scheme files in `dir`.
std::vector<Check> verify_scenarios(const std::filesystem::path& dir, MonomialOrder order);

}  // namespace fiberbound::cli

#endif  // FIBERBOUND_TOOLS_VERIFY_HPP
