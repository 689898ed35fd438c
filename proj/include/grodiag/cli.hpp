#pragma once

namespace grodiag {

// Entry point of the command-line tool. Exit codes: 0 success, 1 a checked
// assertion failed (stability bound, interleaving validity, selftest), 2
// malformed input.
int cli_main(int argc, const char* const* argv);

} // namespace grodiag
