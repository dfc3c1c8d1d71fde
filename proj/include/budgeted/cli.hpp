#pragma once

#include <ostream>

namespace budgeted {

// Exit codes: 0 ok, 1 malformed input, 2 infeasible credal set, 3 guard
// exceeded, 4 golden mismatch (`examples` only), 5 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace budgeted
