#include "stenum/strategies.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace stenum {

std::string_view strategyName(StrategyName s) {
	switch (s) {
		case StrategyName::Auto: return "auto";
		case StrategyName::Naive: return "naive";
		case StrategyName::TSplit: return "tsplit";
		case StrategyName::TwoProg: return "2prog";
		case StrategyName::SuffixScan: return "suffix-scan";
	}
	return "?";
}

StrategyName parseStrategyName(std::string_view s) {
	if (s == "auto") return StrategyName::Auto;
	if (s == "naive") return StrategyName::Naive;
	if (s == "tsplit") return StrategyName::TSplit;
	if (s == "2prog") return StrategyName::TwoProg;
	if (s == "suffix-scan") return StrategyName::SuffixScan;
	throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

NeighborIndex::NeighborIndex(const Program& p) {
	size_t n = size_t(p.numTableAtoms());
	all_.resize(n);
	xs_.resize(n);
	ys_.resize(n);
	zs_.resize(n);
	for (const Clause& c : p.clauses()) {
		assert(!c.isConstraint() && c.width() <= 2);
		if (c.isFact()) continue;
		AtomId h = c.head;
		if (!c.posBody.empty()) {
			AtomId z = c.posBody.front(); // h :- z.
			assert(z != h);
			zs_[size_t(h)].push_back(z);
			ys_[size_t(z)].push_back(h);
			all_[size_t(h)].push_back(z);
			all_[size_t(z)].push_back(h);
		}
		else {
			AtomId x = c.negBody.front(); // h :- not x.
			assert(x != h);
			xs_[size_t(h)].push_back(x);
			xs_[size_t(x)].push_back(h);
			all_[size_t(h)].push_back(x);
			all_[size_t(x)].push_back(h);
		}
	}
	auto dedup = [](std::vector<std::vector<AtomId>>& lists) {
		for (auto& v : lists) {
			std::sort(v.begin(), v.end());
			v.erase(std::unique(v.begin(), v.end()), v.end());
		}
	};
	dedup(all_);
	dedup(xs_);
	dedup(ys_);
	dedup(zs_);
}

bool NeighborIndex::groupsPartitionNeighbors(AtomId a) const {
	// each group is a subset of the neighbor set, so disjoint coverage is a
	// size identity
	return xs_[size_t(a)].size() + ys_[size_t(a)].size() + zs_[size_t(a)].size() == all_[size_t(a)].size();
}

CompleteFamily completeNaive(const Program& node) {
	for (AtomId a = 0; a < node.numTableAtoms(); ++a)
		if (node.occurs(a)) return {{{pos(a)}, {neg(a)}}};
	throw std::invalid_argument("completeNaive: empty program");
}

CompleteFamily completeTSplit(const Program& node) {
	if (node.empty()) throw std::invalid_argument("completeTSplit: empty program");
	int best = 0;
	for (int id = 1; id < node.numClauses(); ++id) {
		const Clause& c = node.clause(id);
		const Clause& b = node.clause(best);
		if (c.posBody.size() + c.negBody.size() > b.posBody.size() + b.negBody.size()) best = id;
	}
	const Clause& c = node.clause(best);
	std::vector<Literal> body;
	for (AtomId a : c.posBody) body.push_back(pos(a));
	for (AtomId a : c.negBody) body.push_back(neg(a));

	CompleteFamily fam;
	fam.sets.push_back({pos(c.head)});
	for (size_t i = 0; i < body.size(); ++i) {
		std::vector<Literal> set;
		set.push_back(neg(c.head));
		for (size_t j = 0; j < i; ++j) set.push_back(body[j]);
		set.push_back(body[i].dual());
		fam.sets.push_back(std::move(set));
	}
	return fam;
}

namespace {

// does the node contain the clause h :- b.  (b positive)?
bool hasHornClause(const Program& p, AtomId h, AtomId b) {
	for (int id : p.occurrences(h).asHead) {
		const Clause& c = p.clause(id);
		if (c.negBody.empty() && c.posBody.size() == 1 && c.posBody.front() == b) return true;
	}
	return false;
}

// does the node contain the clause h :- not b.?
bool hasNegClause(const Program& p, AtomId h, AtomId b) {
	for (int id : p.occurrences(h).asHead) {
		const Clause& c = p.clause(id);
		if (c.posBody.empty() && c.negBody.size() == 1 && c.negBody.front() == b) return true;
	}
	return false;
}

std::vector<AtomId> hornBodyAtomsOf(const Program& p, AtomId h) {
	std::vector<AtomId> ys;
	for (int id : p.occurrences(h).asHead) {
		const Clause& c = p.clause(id);
		if (c.negBody.empty() && c.posBody.size() == 1) ys.push_back(c.posBody.front());
	}
	std::sort(ys.begin(), ys.end());
	ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
	return ys;
}

} // namespace

CompleteFamily completeTwoProg(const Program& node) {
	const int n = node.numTableAtoms();
	if (node.numOccurringAtoms() == 0) throw std::invalid_argument("completeTwoProg: empty program");

	// Case 1: a fact x. forces x into every stable model.
	for (AtomId a = 0; a < n; ++a)
		for (int id : node.occurrences(a).asHead)
			if (node.clause(id).isFact()) return {{{pos(a)}}};

	// Case 2: an occurring atom that heads no clause is in no stable model.
	for (AtomId a = 0; a < n; ++a)
		if (node.occurs(a) && node.occurrences(a).asHead.empty()) return {{{neg(a)}}};

	// Case 3: x :- y. together with x :- not y. or y :- not x. forces x.
	for (AtomId x = 0; x < n; ++x)
		for (AtomId y : hornBodyAtomsOf(node, x))
			if (hasNegClause(node, x, y) || hasNegClause(node, y, x)) return {{{pos(x)}}};

	// Case 4: x :- y. and y :- x. tie the two atoms together.
	for (AtomId x = 0; x < n; ++x)
		for (AtomId y : hornBodyAtomsOf(node, x))
			if (hasHornClause(node, y, x)) return {{{pos(x), pos(y)}, {neg(x), neg(y)}}};

	NeighborIndex nbr(node);

	// Case 5: an atom with exactly one neighbor. 5a if the Horn link x :- y.
	// exists (then it is x's only clause), 5b otherwise (then x :- not y. is).
	for (AtomId x = 0; x < n; ++x) {
		if (!node.occurs(x) || nbr.neighborCount(x) != 1) continue;
		AtomId y = nbr.neighbors(x).front();
		if (hasHornClause(node, x, y)) return {{{pos(x), pos(y)}, {neg(x), neg(y)}}};
	}
	for (AtomId x = 0; x < n; ++x) {
		if (!node.occurs(x) || nbr.neighborCount(x) != 1) continue;
		AtomId y = nbr.neighbors(x).front();
		return {{{pos(x), neg(y)}, {neg(x), pos(y)}}};
	}

	// Case 6: every occurring atom has at least two neighbors, heads a
	// clause, and the three neighbor groups partition its neighborhood.
	auto case6aFamily = [&](AtomId w) {
		CompleteFamily fam;
		std::vector<Literal> inSet{pos(w)};
		for (AtomId y : nbr.yNeighbors(w)) inSet.push_back(pos(y));
		std::vector<Literal> outSet{neg(w)};
		for (AtomId x : nbr.xNeighbors(w)) outSet.push_back(pos(x));
		for (AtomId z : nbr.zNeighbors(w)) outSet.push_back(neg(z));
		fam.sets.push_back(std::move(inSet));
		fam.sets.push_back(std::move(outSet));
		return fam;
	};

	for (AtomId w = 0; w < n; ++w) {
		if (!node.occurs(w)) continue;
		assert(nbr.groupsPartitionNeighbors(w));
		if (!nbr.yNeighbors(w).empty()) return case6aFamily(w);
	}
	for (AtomId w = 0; w < n; ++w) {
		if (!node.occurs(w)) continue;
		if (nbr.neighborCount(w) >= 3) return case6aFamily(w);
	}

	// Case 6b: all clauses purely negative, every atom exactly two neighbors.
	for (AtomId w = 0; w < n; ++w) {
		if (!node.occurs(w)) continue;
		assert(nbr.neighborCount(w) == 2);
		assert(nbr.yNeighbors(w).empty() && nbr.zNeighbors(w).empty());
		AtomId u = nbr.neighbors(w)[0];
		AtomId v = nbr.neighbors(w)[1];
		assert(nbr.neighborCount(u) == 2 && nbr.neighborCount(v) == 2);
		AtomId uPrime = nbr.neighbors(u)[0] == w ? nbr.neighbors(u)[1] : nbr.neighbors(u)[0];
		AtomId vPrime = nbr.neighbors(v)[0] == w ? nbr.neighbors(v)[1] : nbr.neighbors(v)[0];
		return {{{neg(w), pos(u), pos(v)}, {neg(u), pos(w), pos(uPrime)}, {neg(v), pos(w), pos(vPrime)}}};
	}

	throw std::logic_error("completeTwoProg: no case applies");
}

StrategyName selectStrategy(const Program& p, StrategyName requested) {
	switch (requested) {
		case StrategyName::Auto:
			return classify(p).width <= 2 ? StrategyName::TwoProg : StrategyName::TSplit;
		case StrategyName::Naive:
		case StrategyName::TSplit:
			return requested;
		case StrategyName::TwoProg:
			if (classify(p).width > 2)
				throw std::invalid_argument("strategy 2prog requires clauses of width at most 2");
			return requested;
		case StrategyName::SuffixScan:
			throw std::invalid_argument("suffix-scan is not a branching strategy");
	}
	throw std::logic_error("selectStrategy: bad strategy");
}

} // namespace stenum
