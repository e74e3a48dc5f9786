#pragma once

#include <string>
#include <vector>

#include "conecalc/vfc.hpp"

namespace conecalc {

// A named example: an embedded scheme together with its canonical normal
// space presentation.  These back the command-line `fixtures` listing and
// give the test suite a shared set of worked inputs.
struct Fixture {
  std::string name;
  EmbeddedScheme scheme;
  NormalSpaceData normal;
};

const std::vector<std::string>& fixture_names();

// Builds the named fixture from scratch; unknown names are an input error.
Fixture fixture(const std::string& name);

}  // namespace conecalc
