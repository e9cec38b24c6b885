#pragma once

#include <string>
#include <vector>

#include "iotforge/diagnostics.hpp"

namespace iotforge {

/// Grammar check of one emitted ThingML unit against the output subset
/// defined in docs/thingml-subset.ebnf. Purely syntactic; cross-unit name
/// resolution is out of scope. Empty result means the unit conforms.
std::vector<Diagnostic> check_thingml_unit(const std::string& text);

}  // namespace iotforge
