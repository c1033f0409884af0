#pragma once

namespace fer {

// Entry point behind the fer binary. Exit codes: 0 success, 1 runtime
// failure, 2 usage error. Failures print one machine-parseable line:
//   error[<category>]: <message>
int dispatch(int argc, const char* const* argv);

}  // namespace fer
