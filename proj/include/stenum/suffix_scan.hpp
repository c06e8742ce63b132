#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stenum/program.hpp"
#include "stenum/search.hpp"
#include "stenum/semantics.hpp"

namespace stenum {

using Permutation = std::vector<AtomId>;

/// One member of a minimal full family: a permutation together with the
/// suffix-length interval that realizes its symmetric chain. Every subset of
/// the universe is a suffix of some member, and is a within-chain suffix of
/// exactly one member.
struct PermutationMember {
	Permutation order; // order[i] = element at position i; a suffix of length k is the last k entries
	int chainLow = 0;  // chain ranks: suffix lengths chainLow..chainHigh
	int chainHigh = 0;
};

/// Streamed minimal full family over {0..n-1}, built from the symmetric
/// chain decomposition of the subset lattice: each chain is keyed by its
/// half-size member, extended to a maximal chain (elements added in
/// increasing index below the chain bottom, decreasing index above its top)
/// and read off as a permutation. |family| = C(n, floor(n/2)); members are
/// produced with O(n) work each and never stored.
class FullPermutationFamily {
public:
	explicit FullPermutationFamily(int n); // throws if n < 1

	int universe() const { return n_; }
	std::uint64_t size() const;

	void forEach(const std::function<void(const PermutationMember&)>& fn) const;
	/// Members [first, first+count) in enumeration order; used to partition
	/// the stream across workers.
	void forEachRange(std::uint64_t first, std::uint64_t count,
	                  const std::function<void(const PermutationMember&)>& fn) const;

	std::vector<PermutationMember> materialize() const; // guarded to n <= 20

private:
	int n_;
};

struct ScanResult {
	std::optional<Model> model;
	std::uint64_t steps = 0; // basic-operation count, linear in program size
};

/// Walks the suffixes of the permutation from the full set downwards,
/// maintaining reduct counters and the least model incrementally, and
/// reports the single suffix (possibly empty) that is a stable model, if
/// any. The program must be definite; the permutation must cover exactly
/// its occurring atoms.
ScanResult scan(const Program& definite, const Permutation& order);

struct GeneralEnumerationOptions {
	int maxAtoms = 28; // 2^n/sqrt(n) scans; refuse larger universes unless raised
	int jobs = 1;
};

/// Runs scan over every member of the minimal full family of the occurring
/// atoms. Strips the input first and filters the outputs through the
/// retained constraints.
EnumerationResult enumerateGeneral(const Program& p, GeneralEnumerationOptions opts = {});

} // namespace stenum
