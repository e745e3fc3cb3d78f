#pragma once

#include <iosfwd>

namespace nfpc {

/// Command-line front end: `compile`, `validate` and `eval` subcommands.
/// Exit codes: 0 success (all policies satisfied for eval); 1 parse or
/// validation failure; 2 literal/type error during transformation; 3 I/O
/// error; 4 some selected policy unsatisfied; 5 missing value or type
/// mismatch during evaluation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nfpc
