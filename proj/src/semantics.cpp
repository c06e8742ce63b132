#include "stenum/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace stenum {

Model::Model(std::vector<AtomId> as) : atoms(std::move(as)) {
	std::sort(atoms.begin(), atoms.end());
	atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

bool Model::contains(AtomId a) const { return std::binary_search(atoms.begin(), atoms.end(), a); }

Program reduct(const Program& definite, const Model& m) {
	std::vector<Clause> out;
	for (const Clause& c : definite.clauses()) {
		assert(!c.isConstraint());
		bool blocked = false;
		for (AtomId a : c.negBody)
			if (m.contains(a)) { blocked = true; break; }
		if (blocked) continue;
		Clause r;
		r.head = c.head;
		r.posBody = c.posBody;
		out.push_back(std::move(r));
	}
	return Program(definite.symbolsPtr(), std::move(out));
}

Model leastModel(const Program& horn) {
	for (const Clause& c : horn.clauses())
		if (!c.negBody.empty()) throw std::invalid_argument("leastModel: clause has a negative body");

	// remaining[c] counts positive body atoms not yet derived; a clause joins
	// the queue exactly once, when its counter hits zero
	std::vector<int> remaining(size_t(horn.numClauses()));
	std::vector<int> queue;
	for (int id = 0; id < horn.numClauses(); ++id) {
		remaining[size_t(id)] = int(horn.clause(id).posBody.size());
		if (remaining[size_t(id)] == 0) queue.push_back(id);
	}
	std::vector<char> inModel(size_t(horn.numTableAtoms()), 0);
	std::vector<AtomId> derived;
	while (!queue.empty()) {
		int id = queue.back();
		queue.pop_back();
		AtomId h = horn.clause(id).head;
		if (inModel[size_t(h)]) continue;
		inModel[size_t(h)] = 1;
		derived.push_back(h);
		for (int dep : horn.occurrences(h).inPos)
			if (--remaining[size_t(dep)] == 0) queue.push_back(dep);
	}
	std::sort(derived.begin(), derived.end());
	Model m;
	m.atoms = std::move(derived);
	return m;
}

bool isStable(const Program& definite, const Model& m) { return leastModel(reduct(definite, m)) == m; }

bool satisfiesConstraints(std::span<const Clause> constraints, const Model& m) {
	for (const Clause& c : constraints) {
		bool bodyHolds = true;
		for (AtomId a : c.posBody)
			if (!m.contains(a)) { bodyHolds = false; break; }
		if (bodyHolds)
			for (AtomId a : c.negBody)
				if (m.contains(a)) { bodyHolds = false; break; }
		if (bodyHolds) return false;
	}
	return true;
}

static std::vector<std::string> sortedNames(const Model& m, const AtomTable& symbols) {
	std::vector<std::string> names;
	names.reserve(m.atoms.size());
	for (AtomId a : m.atoms) names.push_back(symbols.name(a));
	std::sort(names.begin(), names.end());
	return names;
}

bool modelOrderLess(const Model& a, const Model& b, const AtomTable& symbols) {
	if (a.size() != b.size()) return a.size() < b.size();
	return sortedNames(a, symbols) < sortedNames(b, symbols);
}

std::string formatModel(const Model& m, const AtomTable& symbols) {
	std::ostringstream out;
	out << '{';
	bool first = true;
	for (const std::string& n : sortedNames(m, symbols)) {
		if (!first) out << ' ';
		out << n;
		first = false;
	}
	out << '}';
	return out.str();
}

} // namespace stenum
