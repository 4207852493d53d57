#ifndef EDGEREG_CLI_HPP
#define EDGEREG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "edgereg/ideal.hpp"
#include "edgereg/linalg.hpp"

namespace edgereg {

/// Runs the command line `args` (program name excluded).
/// Exit status: 0 success, 1 a must-pass verification row failed,
/// 2 usage, parse, capacity or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Self-contained Macaulay2 script computing reg(R/I) and the Betti table.
std::string macaulay2_script(const MonomialIdeal& a, const Field& field, const std::string& label);

}  // namespace edgereg

#endif
