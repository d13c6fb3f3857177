#pragma once

#include <string>
#include <string_view>

namespace kolmo {

/// Central tolerance record shared by every solver in the library.
///
/// The CLI builds one from the `KOLMO_TOL` environment variable, a
/// comma-separated `key=value` list (e.g. `opt=1e-10,compare=1e-8`).
struct Tolerances {
  double opt = 1e-12;         // golden-section bracket width (relative to max(1, |hi|))
  double check = 1e-6;        // relative agreement required by cross-validation checks
  double mean = 1e-10;        // zero-mean test, relative to period * max|p|
  double compare = 1e-9;      // comparison-theorem slack, relative to the comparison slope norm
  double admissible = 1e-10;  // relative slack on admissibility boundaries
  double beta = 1e-12;        // relative width of the beta* bisection bracket
};

// Overrides fields of `base` from a `key=value[,key=value...]` list.
// Throws InvalidParams on unknown keys or unparsable values.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

// Returns the defaults overridden by `KOLMO_TOL` when that variable is set.
Tolerances tolerances_from_env();

}  // namespace kolmo
