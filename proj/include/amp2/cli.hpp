#pragma once

#include <ostream>

namespace amp2 {

// exit codes: 0 ok, 1 check failure, 2 bad flags or parse failure, 3 budget exceeded
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace amp2
