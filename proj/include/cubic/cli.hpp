#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;    // parse or usage error
inline constexpr int kExitNumeric = 3;  // non-finite intermediate or failed --verify

/// Entry point behind the `cubic` executable; args excludes argv[0].
///
///   cubic solve (--expr TEXT | --p P --q Q | --lead L --a A --b B --c C | --batch FILE)
///               [--method chen|unified|cardano|moebius|both] [--branch principal|real]
///               [--format text|json|trig|exact] [--precision N] [--polish] [--verify]
///   cubic denest --a A --b B [--format text|json] [--precision N]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubic::cli
