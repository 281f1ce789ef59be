#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deltamix {

// Full command surface behind main(). Returns the process exit code:
// 0 ok, 1 domain error, 2 I/O or usage error. All artifacts land on `out`
// (and, with -o, in a file with identical bytes).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace deltamix
