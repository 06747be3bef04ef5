#pragma once

#include <iosfwd>

namespace labelcap {

// Cross-method regression suite: formula vs automaton capacities, automaton
// counts vs the brute-force oracle, the path-unique equivalence on two
// vertices, and the pair-archetype table. Prints one line per check and
// returns the number of failures.
int run_verification(std::ostream& out);

}  // namespace labelcap
