#pragma once

// JSON documents for algebras and linear maps.
//
// Algebra document:
//   {"name": "...", "dim": n, "parity": [0, 1, ...],
//    "left":  [{"i": 0, "j": 1, "k": 1, "v": "1/2"}, ...], "right": [...], "perp": [...],
//    "gamma": [["1", "0"], ["0", "1"]], "xi": [[...]]}
// Indices are 0-based, rationals are strings, omitted triples are zero and
// "xi" may be absent. gamma[i][j] is the e_i coordinate of gamma(e_j).
//
// Map document: {"rows": r, "cols": c, "entries": ["1", "0", ...]} row-major.

#include <string>
#include <string_view>

#include "supertri/algebra.hpp"
#include "supertri/constructions.hpp"

namespace supertri {

/// Throws ParseError (with line) for malformed JSON and ValidationError for
/// invariant breaches; the result has passed validate().
TrialgebraSpec parse_algebra(std::string_view text);
/// Deterministic: fixed key order, triples sorted, two-space indentation.
std::string emit_algebra(const TrialgebraSpec& spec);

/// A superalgebra is stored as an algebra document whose three products
/// coincide; xi is required.
SuperalgebraSpec parse_superalgebra(std::string_view text);
std::string emit_superalgebra(const SuperalgebraSpec& alg, std::string_view name);

/// {"dim", "parity", "star", "bracket", "gamma", "xi"}, tensors as triple lists.
std::string emit_bracket_pair(const BracketPairSpec& pair);

LinearMap parse_map(std::string_view text);
std::string emit_map(const LinearMap& map);

}  // namespace supertri
