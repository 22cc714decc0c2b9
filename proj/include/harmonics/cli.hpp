#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonics {

// Run the command-line interface on already-split arguments (program name
// excluded).  All output goes to the given streams, which makes the whole
// surface testable in-process.  Returns the process exit code:
//   0  success (including a negative isomorphism answer)
//   1  semantic failure: a grid or board that fails verification
//   2  usage, parse or domain errors
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace harmonics
