#ifndef BINDERKIT_CLIAPP_HPP
#define BINDERKIT_CLIAPP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace binderkit::cli {

/// The whole command-line tool as a function, so tests can drive it
/// in-process. Returns the process exit code: 0 success, 1 scope error,
/// 2 type error, 3 parse error, 4 property counterexample, 5 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binderkit::cli

#endif
