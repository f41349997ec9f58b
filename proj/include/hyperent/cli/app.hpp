#pragma once

#include <ostream>

namespace hyperent::cli {

//! Full command-line entry point. Data goes to `out` (or a file), diagnostics
//! to `err`. Returns 0 on success, 2 on usage/config errors, 3 on numeric
//! domain errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperent::cli
