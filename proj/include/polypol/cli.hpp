#pragma once

#include <ostream>

namespace polypol {

/// Entry point of the `polypol` binary. Exit codes: 0 success, 1 computation
/// error (JSON on `err`) or failed checks, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polypol
