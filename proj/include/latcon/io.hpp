#pragma once

// JSON interchange and DOT export.
//
//   {"elements": ["0", "a", ...], "covers": [["0", "a"], ...]}
//
// Strict parsing (the default) rejects keys other than "elements" and
// "covers" and rejects redundant cover pairs; lenient parsing ignores unknown
// keys and drops redundant covers with a warning.

#include <iosfwd>
#include <string>
#include <string_view>

#include "latcon/lattice.hpp"

namespace latcon {

FiniteLattice parse_lattice_json(std::string_view text, const BuildOptions& opts = {});
std::string lattice_to_json(const FiniteLattice& l, int indent = -1);

/// One node per element, one edge per cover pair, drawn upward (rankdir=BT).
std::string lattice_to_dot(const FiniteLattice& l, std::string_view name = "L");

}  // namespace latcon
