#pragma once

namespace wiro {

inline constexpr const char* kVersion = "0.1.0";

/// Dispatches the CLI. Exit codes: 0 ok, 2 config error, 3 invariant failure.
int run_cli(int argc, char** argv);

}  // namespace wiro
