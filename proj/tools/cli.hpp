#ifndef GOODSG_TOOLS_CLI_HPP_
#define GOODSG_TOOLS_CLI_HPP_

// The goodsg command line.  Exit codes: 0 success, 1 the input is not a
// good semigroup (or fails a validity check), 2 unreadable input or bad
// arguments, 3 the operation needs dimension 2, 4 the operation needs a
// local semigroup.

#include <iosfwd>
#include <string>
#include <vector>

namespace goodsg::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kParseError = 2,
  kUnsupportedDimension = 3,
  kNonLocal = 4,
};

//! args excludes the program name.  A missing input path or "-" reads in.
int run(std::vector<std::string> const& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace goodsg::cli

#endif  // GOODSG_TOOLS_CLI_HPP_
