#pragma once

#include <iosfwd>

namespace hgsq::cli {

/// Exit statuses.
enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidInput = 2,
  kResourceExceeded = 3,
};

/// Entry point behind the hgsq executable; writes results to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hgsq::cli
