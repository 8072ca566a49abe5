#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw {

/// Runs one CLI invocation (arguments without the program name) against the
/// given streams. Exit status: 0 success, 1 semantic failure (Jacobi
/// violation where a Lie algebra is required, oracle FAIL, missing
/// witness), 2 parse/usage error, 3 resource cap exceeded.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace pbw
