#pragma once

#include <iosfwd>

namespace sympbw {

/// Runs one `sympbw` command line. Output goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympbw
