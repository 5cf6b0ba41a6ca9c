#pragma once

#include "delzant/error.hpp"
#include "delzant/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace delzant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitUnsupported = 4;
inline constexpr int kExitParse = 5;

inline constexpr const char* kThreadsEnv = "DELZANT_THREADS";

int exit_code_for(ErrorKind kind);

struct CommandResult {
    int exit_code = kExitOk;
    io::Json payload;
    std::vector<std::string> diagnostics;  // "warning: ..." / "error: ..."
    std::string output;                    // what goes to stdout (empty when --out was used)
};

// Runs one command line (without the program name). Input files named "-"
// (the default) are read from `in`. Never throws.
CommandResult execute(const std::vector<std::string>& args, std::istream& in);

// execute() plus printing: output to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace delzant::cli
