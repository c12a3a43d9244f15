#pragma once

// Command-line surface. run() is the whole CLI behind a testable seam:
// exit 0 on success / all-pass, 1 on failed checks, 2 on usage or input
// errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace smallgraph::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smallgraph::cli
