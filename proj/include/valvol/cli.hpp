#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valvol {

// Dispatches the command line: subcommands ideal, multiplier, asymptotic,
// volume, verify <suite>, zariski, izumi, rees. Returns 0 when everything
// passed, 1 when any check failed, 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valvol
