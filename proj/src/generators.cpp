#include "stenum/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace stenum {

Program genPnt(int n, int t) {
	if (t < 1 || t >= n) throw std::invalid_argument("genPnt: need 1 <= t < n");
	auto symbols = std::make_shared<AtomTable>();
	for (int i = 0; i < n; ++i) symbols->intern("x" + std::to_string(i));

	std::vector<Clause> clauses;
	std::vector<AtomId> others(size_t(n - 1), 0);
	std::vector<int> pick(size_t(t), 0);
	for (AtomId head = 0; head < n; ++head) {
		int k = 0;
		for (AtomId a = 0; a < n; ++a)
			if (a != head) others[size_t(k++)] = a;
		// t-subsets of `others` in lexicographic index order
		for (int i = 0; i < t; ++i) pick[size_t(i)] = i;
		for (;;) {
			Clause c;
			c.head = head;
			for (int i : pick) c.negBody.push_back(others[size_t(i)]);
			clauses.push_back(std::move(c));
			int i = t - 1;
			while (i >= 0 && pick[size_t(i)] == n - 1 - t + i) --i;
			if (i < 0) break;
			++pick[size_t(i)];
			for (int j = i + 1; j < t; ++j) pick[size_t(j)] = pick[size_t(j - 1)] + 1;
		}
	}
	return Program(std::move(symbols), std::move(clauses));
}

Program disjointUnion(const std::vector<Program>& parts) {
	auto symbols = std::make_shared<AtomTable>();
	std::vector<Clause> clauses;
	int copy = 0;
	for (const Program& part : parts) {
		++copy;
		std::vector<AtomId> remap(size_t(part.numTableAtoms()));
		for (AtomId a = 0; a < part.numTableAtoms(); ++a)
			remap[size_t(a)] = symbols->intern(part.symbols().name(a) + "__" + std::to_string(copy));
		for (const Clause& c : part.clauses()) {
			Clause r;
			if (c.head != Clause::noHead) r.head = remap[size_t(c.head)];
			for (AtomId a : c.posBody) r.posBody.push_back(remap[size_t(a)]);
			for (AtomId a : c.negBody) r.negBody.push_back(remap[size_t(a)]);
			std::sort(r.posBody.begin(), r.posBody.end());
			std::sort(r.negBody.begin(), r.negBody.end());
			clauses.push_back(std::move(r));
		}
	}
	return Program(std::move(symbols), std::move(clauses));
}

Program genKCopies(const Program& base, int k) {
	if (k < 1) throw std::invalid_argument("genKCopies: need k >= 1");
	return disjointUnion(std::vector<Program>(size_t(k), base));
}

Program genS6() {
	auto symbols = std::make_shared<AtomTable>();
	for (int i = 0; i < 6; ++i) symbols->intern("a" + std::to_string(i));
	std::vector<Clause> clauses;
	for (int i = 0; i < 6; ++i) {
		for (int step : {1, 2}) {
			Clause c;
			c.head = AtomId((i + step) % 6);
			c.negBody.push_back(AtomId(i));
			clauses.push_back(std::move(c));
		}
	}
	return Program(std::move(symbols), std::move(clauses));
}

namespace {

// splitmix64: platform-independent, unlike the standard distributions
struct Rng {
	std::uint64_t state;
	std::uint64_t next() {
		std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}
	std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

} // namespace

Program genRandom(int n, int width, int clauseCount, std::uint64_t seed) {
	if (width < 2) throw std::invalid_argument("genRandom: need width >= 2");
	if (n < 0 || clauseCount < 0) throw std::invalid_argument("genRandom: negative parameter");
	auto symbols = std::make_shared<AtomTable>();
	for (int i = 0; i < n; ++i) symbols->intern("x" + std::to_string(i));
	std::vector<Clause> clauses;
	if (n == 0) return Program(std::move(symbols), std::move(clauses));

	Rng rng{seed};
	std::vector<AtomId> pool(size_t(n), 0);
	for (int i = 0; i < clauseCount; ++i) {
		Clause c;
		c.head = AtomId(rng.below(std::uint64_t(n)));
		int maxBody = std::min(width - 1, n - 1);
		int bodyLen = int(rng.below(std::uint64_t(maxBody + 1)));
		int poolSize = 0;
		for (AtomId a = 0; a < n; ++a)
			if (a != c.head) pool[size_t(poolSize++)] = a;
		for (int j = 0; j < bodyLen; ++j) {
			int at = j + int(rng.below(std::uint64_t(poolSize - j)));
			std::swap(pool[size_t(j)], pool[size_t(at)]);
			(rng.next() & 1 ? c.negBody : c.posBody).push_back(pool[size_t(j)]);
		}
		std::sort(c.posBody.begin(), c.posBody.end());
		std::sort(c.negBody.begin(), c.negBody.end());
		clauses.push_back(std::move(c));
	}
	return Program(std::move(symbols), std::move(clauses));
}

std::vector<Model> bruteForce(const Program& p) {
	int n = p.numTableAtoms();
	if (n > 25) throw std::invalid_argument("bruteForce: more than 25 atoms");

	std::vector<const Clause*> definite;
	std::vector<Clause> constraints;
	for (const Clause& c : p.clauses())
		(c.isConstraint() ? (void)constraints.push_back(c) : (void)definite.push_back(&c));

	std::vector<Model> found;
	std::vector<char> inLm(size_t(n), 0);
	for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
		auto inM = [&](AtomId a) { return (mask >> a) & 1; };

		// least model of the reduct under M by saturation
		std::fill(inLm.begin(), inLm.end(), 0);
		int lmSize = 0;
		bool changed = true;
		while (changed) {
			changed = false;
			for (const Clause* c : definite) {
				if (inLm[size_t(c->head)]) continue;
				bool blocked = false;
				for (AtomId a : c->negBody)
					if (inM(a)) { blocked = true; break; }
				if (blocked) continue;
				bool fires = true;
				for (AtomId a : c->posBody)
					if (!inLm[size_t(a)]) { fires = false; break; }
				if (fires) {
					inLm[size_t(c->head)] = 1;
					++lmSize;
					changed = true;
				}
			}
		}

		bool stable = lmSize == std::popcount(mask);
		for (AtomId a = 0; stable && a < n; ++a)
			if (inLm[size_t(a)] != char(inM(a))) stable = false;
		if (!stable) continue;

		Model m;
		for (AtomId a = 0; a < n; ++a)
			if (inM(a)) m.atoms.push_back(a);
		if (satisfiesConstraints(constraints, m)) found.push_back(std::move(m));
	}
	std::sort(found.begin(), found.end(), [&](const Model& a, const Model& b) {
		return modelOrderLess(a, b, p.symbols());
	});
	return found;
}

} // namespace stenum
