#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scord {

// Command-line front end. Exit code 0 is success or a positive verdict,
// 1 is a mathematical negative (embeds false, no witness, no copy, lestar
// false or unknown, no disjoint copies), 2 is a usage, parse, shape, or
// precondition error. Every subcommand accepts --format text|machine; the
// two formats carry the same fields.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace scord
