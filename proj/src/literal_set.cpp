#include "stenum/literal_set.hpp"

#include <bit>
#include <cassert>

namespace stenum {

LiteralSet::LiteralSet(int numAtoms) : n_(numAtoms) {
	assert(numAtoms >= 0);
	size_t words = size_t(numAtoms + 63) / 64;
	plus_.assign(words, 0);
	minus_.assign(words, 0);
}

bool LiteralSet::consistent() const {
	for (size_t i = 0; i < plus_.size(); ++i)
		if (plus_[i] & minus_[i]) return false;
	return true;
}

int LiteralSet::count(const std::vector<std::uint64_t>& bits) {
	int c = 0;
	for (std::uint64_t w : bits) c += std::popcount(w);
	return c;
}

LiteralSet LiteralSet::withAdded(std::span<const Literal> ls) const {
	LiteralSet r = *this;
	for (Literal l : ls) r.add(l);
	return r;
}

std::vector<AtomId> LiteralSet::positiveAtoms() const {
	std::vector<AtomId> out;
	for (size_t w = 0; w < plus_.size(); ++w) {
		std::uint64_t bits = plus_[w];
		while (bits) {
			int b = std::countr_zero(bits);
			out.push_back(AtomId(w * 64 + size_t(b)));
			bits &= bits - 1;
		}
	}
	return out;
}

} // namespace stenum
