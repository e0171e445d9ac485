#pragma once

// Command-line front end for the library.  `run` executes one command line:
// it parses argv (argv[0] is the program name), writes the result to `out`
// (JSON by default, plain text with --format text) and diagnostics to `err`.
//
// Exit codes: 0 for a successful computation or a passing check; 1 for a
// failed check, a contradiction, or a domain error (reported as a structured
// JSON error object in JSON mode); 2 for usage errors — unknown commands or
// flags, and flag values that fail validation.  `run` never throws and never
// aborts, whatever argv contains.
//
// Output is deterministic: the same argv (plus the same OSTROWSKI_MAX_STAGE
// environment, which can raise the stage guard) produces byte-identical
// output on every run.

#include <iosfwd>

namespace ostk::cli {

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ostk::cli
