#pragma once

#include <vector>

#include "stenum/literal_set.hpp"
#include "stenum/program.hpp"

namespace stenum {

struct StripResult {
	Program program;                  // definite, tautology-free, virtual-constraint-free
	std::vector<Clause> constraints;  // retained for final model filtering
};

/// Removes tautologies outright and moves constraints aside. A virtual
/// constraint `h :- B, not h` keeps its only semantic effect, rejecting
/// models that satisfy its body, so it is retained as the constraint
/// `:- B, not h` rather than dropped.
StripResult strip(const Program& p);

/// The node simplification [P]_L: drops every clause whose positive body
/// meets L-, whose negative body meets L+, or whose head is decided by L,
/// then erases L's literals from the remaining bodies.
/// Throws std::invalid_argument if L is inconsistent.
Program simplify(const Program& p, const LiteralSet& l);

} // namespace stenum
