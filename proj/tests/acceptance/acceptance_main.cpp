// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Tolerances and thresholds are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "calibration.hpp"
#include "stenum/bounds.hpp"
#include "stenum/generators.hpp"
#include "stenum/preprocess.hpp"
#include "stenum/search.hpp"
#include "stenum/suffix_scan.hpp"

using namespace stenum;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
	if (!cond) throw Failure(what);
}

double secondsSince(Clock::time_point start) {
	return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<std::vector<AtomId>> asSets(const std::vector<Model>& models) {
	std::set<std::vector<AtomId>> out;
	for (const Model& m : models) out.insert(m.atoms);
	return out;
}

std::string fmtCount(std::uint64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- criterion 1
std::string exactFamilyCounts() {
	std::ostringstream note;
	const std::vector<std::tuple<int, int, std::uint64_t>> cases{{3, 1, 3}, {5, 2, 10}, {7, 3, 35}};
	for (auto [n, t, expected] : cases) {
		auto start = Clock::now();
		auto [count, stats] = countModels(genPnt(n, t));
		double secs = secondsSince(start);
		require(count == expected, "P(" + std::to_string(n) + "," + std::to_string(t) + ") gave " +
		                               fmtCount(count) + " models, expected " + fmtCount(expected));
		require(secs < 5.0, "run exceeded 5 s");
		note << "P(" << n << "," << t << ")=" << count << " ";
	}
	return note.str() + "models, each under 5 s";
}

// ---------------------------------------------------------------- criterion 2
std::string sixRingModels() {
	Program s6 = genS6();
	std::set<std::vector<AtomId>> expected;
	for (auto names : {std::vector<std::string>{"a0", "a1", "a3", "a4"},
	                   std::vector<std::string>{"a1", "a2", "a4", "a5"},
	                   std::vector<std::string>{"a2", "a3", "a5", "a0"}}) {
		std::vector<AtomId> ids;
		for (const auto& n : names) ids.push_back(*s6.symbols().find(n));
		std::sort(ids.begin(), ids.end());
		expected.insert(ids);
	}
	require(asSets(enumerate(s6, StrategyName::TwoProg).models) == expected, "case-split route differs");
	require(asSets(enumerate(s6, StrategyName::TSplit).models) == expected, "clause-split route differs");
	require(asSets(enumerateGeneral(s6).models) == expected, "suffix-scan route differs");
	require(asSets(bruteForce(s6)) == expected, "brute-force route differs");
	return "all four routes return exactly the three documented models";
}

// ---------------------------------------------------------------- criterion 3
std::string copiesMeetTheCap() {
	std::ostringstream note;
	std::uint64_t expected = 3;
	for (int k = 1; k <= 4; ++k, expected *= 3) {
		Program p = genKCopies(genPnt(3, 1), k);
		auto [count, stats] = countModels(p);
		require(count == expected, "k=" + std::to_string(k) + " gave " + fmtCount(count));
		std::uint64_t cap = maxStableModelsWidth2(3 * k);
		require(count == cap, "count does not meet the exact width-2 cap at n=" + std::to_string(3 * k));
		note << "n=" << 3 * k << ":" << count << "=cap ";
	}
	return note.str();
}

// ---------------------------------------------------------------- criterion 4
std::string oracleEquivalence() {
	auto start = Clock::now();
	std::uint64_t instances = 0, comparisons = 0;
	for (int width = 2; width <= 4; ++width) {
		for (std::uint64_t i = 0; i < 500; ++i) {
			std::uint64_t seed = std::uint64_t(width) * 1000003u + i * 7919u + 17u;
			int n = 2 + int(seed % 9); // 2..10
			int clauses = 3 + int((seed / 13) % std::uint64_t(3 * n));
			Program p = genRandom(n, width, clauses, seed);
			auto expected = asSets(bruteForce(p));
			require(asSets(enumerate(p, StrategyName::Naive).models) == expected, "naive mismatch");
			require(asSets(enumerate(p, StrategyName::TSplit).models) == expected, "clause-split mismatch");
			comparisons += 2;
			if (classify(p).width <= 2) {
				require(asSets(enumerate(p, StrategyName::TwoProg).models) == expected,
				        "case-split mismatch");
				++comparisons;
			}
			require(asSets(enumerateGeneral(p).models) == expected, "suffix-scan mismatch");
			++comparisons;
			++instances;
		}
	}
	double secs = secondsSince(start);
	require(secs < 120.0, "suite exceeded 2 min");
	std::ostringstream note;
	note << instances << " seeded programs, " << comparisons << " route comparisons, zero mismatches, "
	     << int(secs) << " s";
	return note.str();
}

// ---------------------------------------------------------------- criterion 5
std::string boundConformance() {
	calib::Calibration k = calib::calibrate(2);

	// the envelope itself must dominate the engine; sample across the universe
	std::uint64_t x = 0x9e3779b97f4a7c15ull;
	for (int i = 0; i < 3000; ++i) {
		x ^= x << 13;
		x ^= x >> 7;
		x ^= x << 17;
		std::uint32_t mask = std::uint32_t(x) & ((1u << 27) - 1);
		auto [cnt, stats] = countModels(calib::maskToProgram(mask), StrategyName::TSplit);
		(void)cnt;
		require(stats.calls <= calib::clauseSplitEnvelope(mask), "engine exceeded the measured envelope");
	}

	std::uint64_t checked2prog = 0, checkedSplit = 0;
	auto checkCase = [&](const Program& p) {
		int n = strip(p).program.numOccurringAtoms();
		auto [cnt, stats] = countModels(p, StrategyName::TwoProg);
		(void)cnt;
		double bound = double(k.kCaseSplit) * std::pow(3.0, n / 3.0);
		require(double(stats.calls) <= bound,
		        "case-split calls " + fmtCount(stats.calls) + " exceed bound at n=" + std::to_string(n));
		++checked2prog;
	};
	auto checkSplit = [&](const Program& p, int width, std::uint64_t base) {
		int n = strip(p).program.numOccurringAtoms();
		auto [cnt, stats] = countModels(p, StrategyName::TSplit);
		(void)cnt;
		double bound = double(base) * std::pow(splitGrowthRate(width), n);
		require(double(stats.calls) <= bound, "clause-split calls " + fmtCount(stats.calls) +
		                                          " exceed width-" + std::to_string(width) +
		                                          " bound at n=" + std::to_string(n));
		++checkedSplit;
	};

	// width-2 families and fuzz up to 24 atoms, case strategy
	for (int kk = 1; kk <= 8; ++kk) checkCase(genKCopies(genPnt(3, 1), kk));
	for (int kk = 1; kk <= 4; ++kk) checkCase(genKCopies(genS6(), kk));
	for (int n = 4; n <= 24; ++n) checkCase(genPnt(n, 1));
	for (std::uint64_t seed = 0; seed < 120; ++seed) {
		int n = 4 + int(seed % 21); // 4..24
		checkCase(genRandom(n, 2, 2 * n + int(seed % std::uint64_t(2 * n)), seed * 37 + 5));
	}

	// clause split on width-2 inputs
	for (int kk = 1; kk <= 8; ++kk) checkSplit(genKCopies(genPnt(3, 1), kk), 2, k.kClauseSplit2);
	for (std::uint64_t seed = 0; seed < 60; ++seed)
		checkSplit(genRandom(4 + int(seed % 21), 2, 40, seed * 101 + 3), 2, k.kClauseSplit2);

	// width 3
	for (int kk = 1; kk <= 3; ++kk) checkSplit(genKCopies(genPnt(5, 2), kk), 3, k.kClauseSplit3);
	for (int n = 4; n <= 10; ++n) checkSplit(genPnt(n, 2), 3, k.kClauseSplit3);
	for (std::uint64_t seed = 0; seed < 60; ++seed)
		checkSplit(genRandom(4 + int(seed % 15), 3, 30, seed * 211 + 7), 3, k.kClauseSplit3);

	// width 4
	for (int kk = 1; kk <= 2; ++kk) checkSplit(genKCopies(genPnt(7, 3), kk), 4, k.kClauseSplit4);
	for (int n = 5; n <= 9; ++n) checkSplit(genPnt(n, 3), 4, k.kClauseSplit4);
	for (std::uint64_t seed = 0; seed < 60; ++seed)
		checkSplit(genRandom(4 + int(seed % 13), 4, 25, seed * 307 + 11), 4, k.kClauseSplit4);

	std::ostringstream note;
	note << "K=" << k.kCaseSplit << " (case split), K_t=" << k.kClauseSplit2 << "/" << k.kClauseSplit3
	     << "/" << k.kClauseSplit4 << " (clause split, widths 2/3/4); " << checked2prog << "+"
	     << checkedSplit << " instances within their call bounds";
	return note.str();
}

// ---------------------------------------------------------------- criterion 6
std::string growthRates() {
	const std::vector<std::pair<int, double>> known{
	    {2, 1.61803}, {3, 1.83931}, {4, 1.92757}, {5, 1.96595}};
	for (auto [t, v] : known)
		require(std::abs(splitGrowthRate(t) - v) <= 1e-4,
		        "growth rate for width " + std::to_string(t) + " off by more than 1e-4");
	for (int t = 2; t <= 10; ++t)
		require(splitGrowthRate(t) < 2.0 - std::pow(2.0, -t),
		        "growth rate for width " + std::to_string(t) + " is not below 2 - 1/2^t");
	return "rates 1.61803/1.83931/1.92757/1.96595 within 1e-4; all under 2 - 1/2^t through width 10";
}

// ---------------------------------------------------------------- criterion 7
std::string familyCoverage() {
	auto start = Clock::now();
	for (int n = 1; n <= 12; ++n) {
		FullPermutationFamily family(n);
		require(family.size() == binomial(n, n / 2), "family size differs from the central binomial");
		std::vector<int> asSuffix(size_t(1) << n, 0);
		std::vector<int> inChain(size_t(1) << n, 0);
		std::uint64_t members = 0;
		family.forEach([&](const PermutationMember& m) {
			++members;
			std::uint64_t mask = 0;
			++asSuffix[0];
			if (m.chainLow == 0) ++inChain[0];
			for (int len = 1; len <= n; ++len) {
				mask |= std::uint64_t(1) << m.order[size_t(n - len)];
				++asSuffix[size_t(mask)];
				if (len >= m.chainLow && len <= m.chainHigh) ++inChain[size_t(mask)];
			}
		});
		require(members == family.size(), "stream length differs from size()");
		for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
			require(asSuffix[size_t(mask)] >= 1, "subset missing from all suffixes");
			require(inChain[size_t(mask)] == 1, "subset not in exactly one chain");
		}
	}
	double secs = secondsSince(start);
	require(secs < 30.0, "family verification exceeded 30 s");
	return "n=1..12: size C(n,floor(n/2)); every subset a suffix of some member and a within-chain "
	       "suffix of exactly one";
}

// ---------------------------------------------------------------- criterion 8
std::string scanLinearity() {
	Program base;
	std::uint64_t seed = 1000;
	do {
		base = genRandom(12, 2, 36, seed++);
	} while (base.numOccurringAtoms() != 12);

	auto scale = [&](int factor) {
		std::vector<Clause> clauses;
		for (int i = 0; i < factor; ++i)
			clauses.insert(clauses.end(), base.clauses().begin(), base.clauses().end());
		return Program(base.symbolsPtr(), std::move(clauses));
	};
	Program x1 = scale(1), x2 = scale(2), x4 = scale(4);

	Permutation forward;
	for (AtomId a = 0; a < base.numTableAtoms(); ++a) forward.push_back(a);
	Permutation backward(forward.rbegin(), forward.rend());

	std::uint64_t s1 = 0, s2 = 0, s4 = 0;
	for (const Permutation& order : {forward, backward}) {
		s1 += scan(x1, order).steps;
		s2 += scan(x2, order).steps;
		s4 += scan(x4, order).steps;
	}
	double r2 = double(s2) / double(s1);
	double r4 = double(s4) / double(s1);
	require(r2 <= 2.5, "doubling the clauses grew work by more than 2.5x");
	require(r4 <= 5.0, "quadrupling the clauses grew work by more than 5x");
	std::ostringstream note;
	note.precision(3);
	note << "n=12 fixed: steps x" << r2 << " for 2x clauses, x" << r4 << " for 4x clauses";
	return note.str();
}

// ---------------------------------------------------------------- criterion 9
std::string exclusions() {
	return "asymptotic worst-case guarantees themselves are not tested at desk scale (no dedicated "
	       "width-3 split; the no-dual-pair class rate 1.23651 is reported, never asserted); "
	       "criteria 5-8 are the operational surrogates";
}

} // namespace

int main() {
	struct Criterion {
		int id;
		const char* label;
		std::function<std::string()> run;
	};
	const std::vector<Criterion> criteria{
	    {1, "exact counts on the combination families", exactFamilyCounts},
	    {2, "six-atom ring models via four routes", sixRingModels},
	    {3, "disjoint copies multiply and meet the width-2 cap", copiesMeetTheCap},
	    {4, "oracle equivalence across engines on seeded fuzz", oracleEquivalence},
	    {5, "call counts within calibrated growth bounds", boundConformance},
	    {6, "clause-split growth rates", growthRates},
	    {7, "minimal full permutation family", familyCoverage},
	    {8, "suffix-scan work is linear in program size", scanLinearity},
	    {9, "out-of-scope asymptotics stated", exclusions},
	};

	int failures = 0;
	for (const Criterion& c : criteria) {
		auto start = Clock::now();
		try {
			std::string note = c.run();
			std::printf("[PASS] %d %s: %s (%.1fs)\n", c.id, c.label, note.c_str(), secondsSince(start));
		}
		catch (const std::exception& e) {
			std::printf("[FAIL] %d %s: %s\n", c.id, c.label, e.what());
			++failures;
		}
		std::fflush(stdout);
	}
	std::printf("[SUMMARY] %zu/%zu criteria passed\n", criteria.size() - size_t(failures),
	            criteria.size());
	return failures == 0 ? 0 : 1;
}
