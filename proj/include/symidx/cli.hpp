#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symidx::cli {

// Full command-line driver; the binary in tools/ is a thin wrapper. Returns
// the process exit status: 0 all-pass, 1 any failed verdict, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symidx::cli
