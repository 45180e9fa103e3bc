#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ovf::cli {

/// Runs `ovf <command> [inputs…] [options]` with args excluding the program
/// name. Returns 0 on success, 2 on a mathematical rejection, 1 on usage,
/// I/O or format errors. Reports go to --out, or to `out` when absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ovf::cli
