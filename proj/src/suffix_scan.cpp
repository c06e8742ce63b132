#include "stenum/suffix_scan.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <thread>

#include "stenum/bounds.hpp"
#include "stenum/preprocess.hpp"

namespace stenum {

FullPermutationFamily::FullPermutationFamily(int n) : n_(n) {
	if (n < 1) throw std::invalid_argument("FullPermutationFamily: need n >= 1");
	if (n > 62) throw std::invalid_argument("FullPermutationFamily: n too large");
}

std::uint64_t FullPermutationFamily::size() const { return binomial(n_, n_ / 2); }

namespace {

// Reads the member off one half-size subset: bracket-match its bit string
// (set bit = open), so the matched opens are the chain bottom, the unmatched
// positions are the chain's varying zone and the matched closes sit above
// the chain top.
void buildMember(int n, std::uint64_t mask, PermutationMember& out) {
	int open[64], matchedOpen[32], matchedClose[32], unmatched[64];
	int nOpen = 0, nMatched = 0, nUnmatched = 0;
	for (int i = 0; i < n; ++i) {
		if ((mask >> i) & 1)
			open[nOpen++] = i;
		else if (nOpen > 0) {
			matchedOpen[nMatched] = open[--nOpen];
			matchedClose[nMatched] = i;
			++nMatched;
		}
		else
			unmatched[nUnmatched++] = i;
	}
	// unmatched zeros all precede unmatched ones, so appending the stack
	// residue keeps the list ascending
	for (int i = 0; i < nOpen; ++i) unmatched[nUnmatched++] = open[i];
	std::sort(matchedOpen, matchedOpen + nMatched);

	out.order.clear();
	out.order.reserve(size_t(n));
	for (int i = 0; i < nMatched; ++i) out.order.push_back(matchedClose[i]);
	for (int i = 0; i < nUnmatched; ++i) out.order.push_back(unmatched[i]);
	for (int i = nMatched - 1; i >= 0; --i) out.order.push_back(matchedOpen[i]);
	out.chainLow = nMatched;
	out.chainHigh = nMatched + nUnmatched;
}

std::uint64_t gosperNext(std::uint64_t mask) {
	std::uint64_t c = mask & (~mask + 1);
	std::uint64_t r = mask + c;
	return (((r ^ mask) >> 2) / c) | r;
}

// rank-th k-subset of {0..n-1} in ascending-mask (colexicographic) order
std::uint64_t unrankSubset(int n, int k, std::uint64_t rank) {
	std::uint64_t mask = 0;
	for (int j = k; j >= 1; --j) {
		int x = j - 1;
		while (x + 1 < n && binomial(x + 1, j) <= rank) ++x;
		mask |= std::uint64_t(1) << x;
		rank -= binomial(x, j);
	}
	return mask;
}

} // namespace

void FullPermutationFamily::forEachRange(std::uint64_t first, std::uint64_t count,
                                         const std::function<void(const PermutationMember&)>& fn) const {
	if (count == 0) return;
	int k = n_ / 2;
	PermutationMember member;
	if (k == 0) {
		assert(first == 0 && count == 1);
		buildMember(n_, 0, member);
		fn(member);
		return;
	}
	std::uint64_t mask = unrankSubset(n_, k, first);
	for (std::uint64_t i = 0; i < count; ++i) {
		buildMember(n_, mask, member);
		fn(member);
		mask = gosperNext(mask);
	}
}

void FullPermutationFamily::forEach(const std::function<void(const PermutationMember&)>& fn) const {
	forEachRange(0, size(), fn);
}

std::vector<PermutationMember> FullPermutationFamily::materialize() const {
	if (n_ > 20) throw std::invalid_argument("FullPermutationFamily::materialize: n too large");
	std::vector<PermutationMember> out;
	out.reserve(size_t(size()));
	forEach([&](const PermutationMember& m) { out.push_back(m); });
	return out;
}

ScanResult scan(const Program& definite, const Permutation& order) {
#ifndef NDEBUG
	{
		assert(int(order.size()) == definite.numOccurringAtoms());
		std::vector<AtomId> check(order);
		std::sort(check.begin(), check.end());
		assert(std::adjacent_find(check.begin(), check.end()) == check.end());
		for (AtomId a : check) assert(definite.occurs(a));
	}
#endif
	ScanResult result;
	const int numClauses = definite.numClauses();
	std::vector<int> posLeft(size_t(numClauses), 0), negLeft(size_t(numClauses), 0);
	std::vector<char> used(size_t(numClauses), 0);
	std::vector<char> inM(size_t(definite.numTableAtoms()), 0);
	std::vector<char> inLm(size_t(definite.numTableAtoms()), 0);
	std::vector<int> queue;

	for (int id = 0; id < numClauses; ++id) {
		const Clause& c = definite.clause(id);
		assert(!c.isConstraint());
		posLeft[size_t(id)] = int(c.posBody.size());
		negLeft[size_t(id)] = int(c.negBody.size());
		if (posLeft[size_t(id)] == 0 && negLeft[size_t(id)] == 0) queue.push_back(id);
		++result.steps;
	}
	for (AtomId a : order) inM[size_t(a)] = 1;
	int sizeM = int(order.size());
	int sizeLm = 0;
	int lmOutsideM = 0; // |lm \ M|; equality test is two integer compares

	auto drain = [&] {
		while (!queue.empty()) {
			int id = queue.back();
			queue.pop_back();
			++result.steps;
			assert(!used[size_t(id)]);
			used[size_t(id)] = 1;
			AtomId h = definite.clause(id).head;
			if (inLm[size_t(h)]) continue;
			inLm[size_t(h)] = 1;
			++sizeLm;
			if (!inM[size_t(h)]) ++lmOutsideM;
			for (int dep : definite.occurrences(h).inPos) {
				++result.steps;
				if (--posLeft[size_t(dep)] == 0 && negLeft[size_t(dep)] == 0 && !used[size_t(dep)])
					queue.push_back(dep);
			}
		}
	};

#ifndef NDEBUG
	int prevLm = 0, prevM = sizeM, prevOutside = 0;
	auto checkMonotone = [&] {
		// lm only grows, M only shrinks, and atoms never return to M, so the
		// outside counter cannot go down either
		assert(sizeLm >= prevLm && sizeM <= prevM && lmOutsideM >= prevOutside);
		prevLm = sizeLm;
		prevM = sizeM;
		prevOutside = lmOutsideM;
	};
#endif
	for (size_t j = 0; j < order.size(); ++j) {
		++result.steps;
		drain();
#ifndef NDEBUG
		checkMonotone();
#endif
		if (sizeLm == sizeM && lmOutsideM == 0) {
			Model m;
			m.atoms.assign(order.begin() + long(j), order.end());
			std::sort(m.atoms.begin(), m.atoms.end());
			result.model = std::move(m);
			return result;
		}
		AtomId x = order[j];
		inM[size_t(x)] = 0;
		--sizeM;
		if (inLm[size_t(x)]) ++lmOutsideM;
		for (int id : definite.occurrences(x).inNeg) {
			++result.steps;
			if (--negLeft[size_t(id)] == 0 && posLeft[size_t(id)] == 0 && !used[size_t(id)])
				queue.push_back(id);
		}
	}
	drain();
	if (sizeLm == 0 && sizeM == 0) result.model = Model{};
	return result;
}

EnumerationResult enumerateGeneral(const Program& p, GeneralEnumerationOptions opts) {
	StripResult stripped = strip(p);
	const Program& root = stripped.program;

	std::vector<AtomId> universe;
	for (AtomId a = 0; a < root.numTableAtoms(); ++a)
		if (root.occurs(a)) universe.push_back(a);

	EnumerationResult result;
	if (universe.empty()) {
		result.stats.calls = 0;
		Model empty;
		if (isStable(root, empty) && satisfiesConstraints(stripped.constraints, empty)) {
			result.models.push_back(std::move(empty));
			result.stats.modelsFound = 1;
		}
		return result;
	}
	if (int(universe.size()) > opts.maxAtoms)
		throw std::invalid_argument("enumerateGeneral: " + std::to_string(universe.size()) +
		                            " atoms exceed the scan limit of " + std::to_string(opts.maxAtoms));

	FullPermutationFamily family(int(universe.size()));
	const std::uint64_t total = family.size();
	const int jobs = std::max(1, std::min<int>(opts.jobs, int(std::min<std::uint64_t>(total, 64))));

	std::vector<std::set<std::vector<AtomId>>> foundPerJob{size_t(jobs)};
	auto work = [&](int job) {
		std::uint64_t lo = total * std::uint64_t(job) / std::uint64_t(jobs);
		std::uint64_t hi = total * std::uint64_t(job + 1) / std::uint64_t(jobs);
		Permutation order(universe.size());
		family.forEachRange(lo, hi - lo, [&](const PermutationMember& member) {
			for (size_t i = 0; i < member.order.size(); ++i)
				order[i] = universe[size_t(member.order[i])];
			ScanResult r = scan(root, order);
			if (r.model) foundPerJob[size_t(job)].insert(r.model->atoms);
		});
	};
	if (jobs == 1)
		work(0);
	else {
		std::vector<std::thread> threads;
		for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
		for (std::thread& t : threads) t.join();
	}

	result.stats.calls = total;
	result.stats.leaves = total;
	result.stats.perDepthCalls = {total};

	std::set<std::vector<AtomId>> found;
	for (auto& part : foundPerJob) found.merge(part);
	for (const std::vector<AtomId>& atoms : found) {
		Model m;
		m.atoms = atoms;
		if (isStable(root, m) && satisfiesConstraints(stripped.constraints, m))
			result.models.push_back(std::move(m));
	}
	std::sort(result.models.begin(), result.models.end(), [&](const Model& a, const Model& b) {
		return modelOrderLess(a, b, p.symbols());
	});
	result.stats.modelsFound = result.models.size();
	return result;
}

} // namespace stenum
