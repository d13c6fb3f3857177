#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kolmo/modulus.hpp"

namespace kolmo::cli {

// Runs one command line (without the program name). Exit codes: 0 success or admissible,
// 1 not admissible, 2 malformed input or a domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// dragomir:<eta> | box:<order>=<bound>[,...] | hom:<order>^<theta>[,...]@<level>
ClassSpec parse_spec(const std::string& text);

// {"kind": "box"|"homogeneous"|"dragomir", "terms": {"<order>": value, ...}, "level": L, "eta": E}
ClassSpec parse_spec_json(const std::string& json_text);

}  // namespace kolmo::cli
