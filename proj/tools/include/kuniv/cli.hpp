#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kuniv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one `kuniv` invocation.  `args` excludes the program name.  The
/// JSON report goes to `out` (or the file named by --report), diagnostics
/// to `err`.  Returns 0 on success, 1 on a domain error (tie, exceeded
/// budget, invalid parameter, failed verification) and 2 on a usage error
/// (unknown subcommand or flag, missing or malformed input file).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace kuniv::cli
