#include "stenum/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace stenum {

StripResult strip(const Program& p) {
	std::vector<Clause> kept;
	std::vector<Clause> constraints;
	for (const Clause& c : p.clauses()) {
		if (c.isConstraint()) {
			constraints.push_back(c);
		}
		else if (c.isTautology()) {
			// head in its own positive body, or clashing body: never changes
			// any reduct's least model
		}
		else if (c.isVirtualConstraint()) {
			Clause asConstraint = c;
			asConstraint.head = Clause::noHead;
			constraints.push_back(std::move(asConstraint));
		}
		else
			kept.push_back(c);
	}
	return {Program(p.symbolsPtr(), std::move(kept)), std::move(constraints)};
}

Program simplify(const Program& p, const LiteralSet& l) {
	if (!l.consistent()) throw std::invalid_argument("simplify: inconsistent literal set");
	std::vector<Clause> out;
	for (const Clause& c : p.clauses()) {
		if (c.head != Clause::noHead && l.decides(c.head)) continue;
		bool dropped = false;
		for (AtomId a : c.posBody)
			if (l.hasNegative(a)) { dropped = true; break; }
		if (dropped) continue;
		for (AtomId a : c.negBody)
			if (l.hasPositive(a)) { dropped = true; break; }
		if (dropped) continue;
		Clause r;
		r.head = c.head;
		for (AtomId a : c.posBody)
			if (!l.hasPositive(a)) r.posBody.push_back(a);
		for (AtomId a : c.negBody)
			if (!l.hasNegative(a)) r.negBody.push_back(a);
		out.push_back(std::move(r));
	}
	return Program(p.symbolsPtr(), std::move(out));
}

} // namespace stenum
