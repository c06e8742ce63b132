#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stenum/program.hpp"

namespace stenum {

enum class StrategyName { Auto, Naive, TSplit, TwoProg, SuffixScan };

std::string_view strategyName(StrategyName s);
StrategyName parseStrategyName(std::string_view s); // throws std::invalid_argument

/// A branching family: every stable model of the node program is consistent
/// with at least one member set. Members are nonempty, internally consistent
/// literal sets over atoms occurring in the node program.
struct CompleteFamily {
	std::vector<std::vector<Literal>> sets;
};

/// Neighbor structure of a stripped definite width-2 program. Two atoms are
/// neighbors when some clause contains both. Per atom w the neighbors split
/// into three groups:
///   x-type: x with  w :- not x.  or  x :- not w.
///   y-type: y with  y :- w.
///   z-type: z with  w :- z.
class NeighborIndex {
public:
	explicit NeighborIndex(const Program& p);

	int neighborCount(AtomId a) const { return int(all_[size_t(a)].size()); }
	std::span<const AtomId> neighbors(AtomId a) const { return all_[size_t(a)]; }
	std::span<const AtomId> xNeighbors(AtomId a) const { return xs_[size_t(a)]; }
	std::span<const AtomId> yNeighbors(AtomId a) const { return ys_[size_t(a)]; }
	std::span<const AtomId> zNeighbors(AtomId a) const { return zs_[size_t(a)]; }

	/// Disjointness of the three groups plus full coverage; holds whenever
	/// the two-atom clause patterns of the first four split cases are absent.
	bool groupsPartitionNeighbors(AtomId a) const;

private:
	std::vector<std::vector<AtomId>> all_, xs_, ys_, zs_;
};

/// {{a}, {not a}} over the lowest-id occurring atom.
CompleteFamily completeNaive(const Program& node);

/// Splits on one clause x :- l1, ..., lk of maximum body length (lowest
/// clause id on ties): {{x}} plus, for each i, {not x, l1, ..., l(i-1), dual(li)}.
/// Body literals are ordered positives-then-negatives, each ascending by atom.
CompleteFamily completeTSplit(const Program& node);

/// Case analysis for stripped definite width-2 programs; the first matching
/// case in the fixed order decides the family. See the implementation for
/// the per-case constructions.
CompleteFamily completeTwoProg(const Program& node);

/// Resolves Auto (TwoProg when the program width is at most 2, TSplit
/// otherwise) and validates explicit requests against class preconditions.
StrategyName selectStrategy(const Program& p, StrategyName requested);

} // namespace stenum
