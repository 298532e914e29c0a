#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string_view>

#include "ordercert/plane.hpp"
#include "ordercert/skew.hpp"

namespace ordercert::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,      // false relation, invalid derivation, rejected witness
  kUndecided = 2,   // unknown facts, or no witness found
  kInputError = 3,  // syntax, parse, or I/O error
};

/// Bad command-line input; maps to kInputError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs one command line. Human-readable text goes to `out`, diagnostics to
/// `err`; certificates are written only to files.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "d:=d b" replaces delta by delta beta; the right side is a word in the
/// original generators. Throws UsageError.
GeneratorSet apply_perturbation(std::string_view spec, GeneratorSet gens);

/// Whitespace-separated letters a, b, c, d, ch, dh (or full or Greek names)
/// with optional ^k powers and ^x conjugations. Throws UsageError.
PlaneWord parse_h_word(std::string_view text, const GeneratorSet& gens = GeneratorSet::standard());

/// "p/q,p/q". Throws UsageError.
Point parse_point(std::string_view text);

}  // namespace ordercert::cli
