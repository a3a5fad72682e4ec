#pragma once

#include <ostream>

namespace nullsatz {

// Exit codes: 0 success or agreement, 1 mathematical disagreement, 2 input error, 3 unsupported regime.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nullsatz
