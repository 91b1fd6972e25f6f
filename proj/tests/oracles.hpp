// Test-only oracles, kept independent of the library code paths they check:
// a 2-cocycle trivialization test for the splitting question, and brute-force
// searches for the tame lifting problems.
#pragma once

#include "cartancert/metacyclic.hpp"

namespace cartancert::oracles {

// Does the extension 1 -> <x^r> -> N -> N^ab -> 1 split? Decided by building
// the factor-set of the set-theoretic section and testing whether it is a
// coboundary, prime power by prime power (Smith-style elimination mod q^k).
bool extension_splits_by_cocycle(const GroupShape& s);

// Exhaustive search over all lifts of ((0, a), (1, 0)) through the tame
// relation sigma tau sigma^-1 = tau^p.
bool lift_at_p_solvable_bruteforce(const GroupShape& s, u32 a);

}  // namespace cartancert::oracles
