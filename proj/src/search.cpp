#include "stenum/search.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "stenum/preprocess.hpp"

namespace stenum {

namespace {

struct Search {
	const Program& root; // stripped, definite
	std::span<const Clause> constraints;
	StrategyName strategy;
	std::optional<std::uint64_t> maxModels;

	std::set<std::vector<AtomId>> found;
	SearchStats stats;
	bool stop = false;

	CompleteFamily complete(const Program& node) const {
		switch (strategy) {
			case StrategyName::Naive: return completeNaive(node);
			case StrategyName::TSplit: return completeTSplit(node);
			case StrategyName::TwoProg: return completeTwoProg(node);
			default: throw std::logic_error("complete: unresolved strategy");
		}
	}

	void visit(const LiteralSet& context, int depth, int parentAtoms) {
		++stats.calls;
		if (depth >= int(stats.perDepthCalls.size())) stats.perDepthCalls.resize(size_t(depth) + 1, 0);
		++stats.perDepthCalls[size_t(depth)];
		stats.maxDepth = std::max(stats.maxDepth, depth);

		if (!context.consistent()) return;
		Program node = simplify(root, context);
		assert(node.numOccurringAtoms() < parentAtoms);
		(void)parentAtoms;

		if (node.empty()) {
			++stats.leaves;
			Model candidate;
			candidate.atoms = context.positiveAtoms();
			if (isStable(root, candidate) && satisfiesConstraints(constraints, candidate)) {
				if (found.insert(candidate.atoms).second && maxModels && found.size() >= *maxModels)
					stop = true;
			}
			return;
		}

		CompleteFamily family = complete(node);
		assert(!family.sets.empty());
		for (const std::vector<Literal>& branch : family.sets) {
			assert(!branch.empty());
#ifndef NDEBUG
			for (Literal l : branch) assert(node.occurs(l.atom));
#endif
			visit(context.withAdded(branch), depth + 1, node.numOccurringAtoms());
			if (stop) return;
		}
	}
};

Search run(const Program& p, const LiteralSet& context, StrategyName strategy,
           std::optional<std::uint64_t> maxModels, StripResult& stripped) {
	if (context.universeSize() != p.numTableAtoms())
		throw std::invalid_argument("enumerate: context universe does not match the program's atom table");
	stripped = strip(p);
	StrategyName resolved = selectStrategy(stripped.program, strategy);
	Search search{stripped.program, stripped.constraints, resolved, maxModels, {}, {}, false};
	if (!maxModels || *maxModels > 0)
		search.visit(context, 0, stripped.program.numOccurringAtoms() + 1);
	search.stats.modelsFound = search.found.size();
	return search;
}

} // namespace

EnumerationResult enumerate(const Program& p, const LiteralSet& context, StrategyName strategy,
                            std::optional<std::uint64_t> maxModels) {
	StripResult stripped;
	Search search = run(p, context, strategy, maxModels, stripped);
	EnumerationResult result;
	result.stats = std::move(search.stats);
	for (const std::vector<AtomId>& atoms : search.found) {
		Model m;
		m.atoms = atoms;
		result.models.push_back(std::move(m));
	}
	std::sort(result.models.begin(), result.models.end(), [&](const Model& a, const Model& b) {
		return modelOrderLess(a, b, p.symbols());
	});
	return result;
}

EnumerationResult enumerate(const Program& p, StrategyName strategy, std::optional<std::uint64_t> maxModels) {
	return enumerate(p, LiteralSet(p.numTableAtoms()), strategy, maxModels);
}

std::pair<std::uint64_t, SearchStats> countModels(const Program& p, const LiteralSet& context,
                                                  StrategyName strategy) {
	StripResult stripped;
	Search search = run(p, context, strategy, std::nullopt, stripped);
	return {search.found.size(), std::move(search.stats)};
}

std::pair<std::uint64_t, SearchStats> countModels(const Program& p, StrategyName strategy) {
	return countModels(p, LiteralSet(p.numTableAtoms()), strategy);
}

} // namespace stenum
