#pragma once

// Command-line front end. JSON results go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 check failure, 2 malformed input, 3 guard overflow.

#include <iosfwd>

namespace meetless {

int run_cli(int argc, char const* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace meetless
