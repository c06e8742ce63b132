#pragma once

#include <span>
#include <string>
#include <vector>

#include "stenum/program.hpp"

namespace stenum {

/// A candidate or actual stable model: sorted duplicate-free atom ids.
struct Model {
	std::vector<AtomId> atoms;

	Model() = default;
	explicit Model(std::vector<AtomId> as);

	bool contains(AtomId a) const;
	size_t size() const { return atoms.size(); }

	friend bool operator==(const Model&, const Model&) = default;
};

/// Gelfond-Lifschitz reduct of a definite program: drops every clause whose
/// negative body meets M, erases negative bodies from the rest.
Program reduct(const Program& definite, const Model& m);

/// Least model of a Horn program via counter-based unit propagation, linear
/// in the program size. Throws std::invalid_argument on a nonempty negative body.
Model leastModel(const Program& horn);

/// M is stable for a definite program iff it equals the least model of the
/// reduct under M.
bool isStable(const Program& definite, const Model& m);

/// True iff no constraint body is satisfied by M.
bool satisfiesConstraints(std::span<const Clause> constraints, const Model& m);

/// Canonical output order: by size, then lexicographically over the sorted
/// atom-name sequences.
bool modelOrderLess(const Model& a, const Model& b, const AtomTable& symbols);

/// `{name name ...}` with names sorted lexicographically.
std::string formatModel(const Model& m, const AtomTable& symbols);

} // namespace stenum
