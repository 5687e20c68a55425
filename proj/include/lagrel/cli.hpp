#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lagrel {

// Runs one command line (without the program name). Returns 0 on success, 1 when an eq or
// check answer is negative or an axiom fails, and 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagrel
