#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stenum/literal_set.hpp"
#include "stenum/semantics.hpp"
#include "stenum/strategies.hpp"

namespace stenum {

/// Recursion-tree instrumentation of one enumeration run.
struct SearchStats {
	std::uint64_t calls = 0;   // invocations of the recursive step, top call included
	std::uint64_t leaves = 0;  // calls that reached the empty-simplification test
	std::uint64_t modelsFound = 0;
	int maxDepth = 0;
	std::vector<std::uint64_t> perDepthCalls;
};

struct EnumerationResult {
	std::vector<Model> models; // deduplicated, canonical order
	SearchStats stats;
};

/// Enumerates the stable models of p consistent with the context literals.
/// The input may contain constraints, tautologies and virtual constraints;
/// they are stripped up front and every leaf candidate is re-validated
/// against the stripped program and the retained constraints.
EnumerationResult enumerate(const Program& p, const LiteralSet& context,
                            StrategyName strategy = StrategyName::Auto,
                            std::optional<std::uint64_t> maxModels = std::nullopt);

/// Same with an empty context.
EnumerationResult enumerate(const Program& p, StrategyName strategy = StrategyName::Auto,
                            std::optional<std::uint64_t> maxModels = std::nullopt);

/// enumerate without materializing the model list.
std::pair<std::uint64_t, SearchStats> countModels(const Program& p, const LiteralSet& context,
                                                  StrategyName strategy = StrategyName::Auto);

std::pair<std::uint64_t, SearchStats> countModels(const Program& p,
                                                  StrategyName strategy = StrategyName::Auto);

} // namespace stenum
