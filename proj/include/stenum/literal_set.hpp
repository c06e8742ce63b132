#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stenum/program.hpp"

namespace stenum {

/// Branching context: a set of literals over a fixed atom universe, split
/// into a positive part and a negative part. Both parts may mention the same
/// atom; consistent() detects exactly that.
class LiteralSet {
public:
	LiteralSet() = default;
	explicit LiteralSet(int numAtoms);

	int universeSize() const { return n_; }

	void add(Literal l) { l.positive() ? addPositive(l.atom) : addNegative(l.atom); }
	void addPositive(AtomId a) { set(plus_, a); }
	void addNegative(AtomId a) { set(minus_, a); }

	bool hasPositive(AtomId a) const { return test(plus_, a); }
	bool hasNegative(AtomId a) const { return test(minus_, a); }
	/// Atom is in L0, i.e. decided either way.
	bool decides(AtomId a) const { return hasPositive(a) || hasNegative(a); }

	bool consistent() const;
	int sizePlus() const { return count(plus_); }
	int sizeMinus() const { return count(minus_); }

	LiteralSet withAdded(std::span<const Literal> ls) const;

	/// L+ as a sorted atom-id vector.
	std::vector<AtomId> positiveAtoms() const;

private:
	static void set(std::vector<std::uint64_t>& bits, AtomId a) { bits[size_t(a) >> 6] |= std::uint64_t(1) << (a & 63); }
	static bool test(const std::vector<std::uint64_t>& bits, AtomId a) {
		return (bits[size_t(a) >> 6] >> (a & 63)) & 1;
	}
	static int count(const std::vector<std::uint64_t>& bits);

	int n_ = 0;
	std::vector<std::uint64_t> plus_;
	std::vector<std::uint64_t> minus_;
};

} // namespace stenum
