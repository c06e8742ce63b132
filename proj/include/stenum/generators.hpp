#pragma once

#include <cstdint>
#include <vector>

#include "stenum/program.hpp"
#include "stenum/semantics.hpp"

namespace stenum {

/// All clauses `x :- not b1, ..., not bt` over n atoms, where the b's range
/// over the t-subsets of the other atoms. Requires 1 <= t < n.
Program genPnt(int n, int t);

/// Disjoint union with atom `a` of part i renamed to `a__i` (1-based).
Program disjointUnion(const std::vector<Program>& parts);

/// k disjoint renamed copies of base, k >= 1.
Program genKCopies(const Program& base, int k);

/// Six atoms a0..a5 with a(i+1) :- not ai. and a(i+2) :- not ai. mod 6.
Program genS6();

/// Seed-deterministic definite program over atoms x0..x(n-1): clauseCount
/// clauses with at most width-1 body literals, no repeated body atom, body
/// atoms distinct from the head. Requires width >= 2.
Program genRandom(int n, int width, int clauseCount, std::uint64_t seed);

/// Exhaustive stable-model search over all 2^n atom subsets; the reference
/// the other enumerators are checked against. Self-contained: it runs its
/// own fixpoint per subset instead of reusing reduct/leastModel.
/// Guarded to at most 25 table atoms.
std::vector<Model> bruteForce(const Program& p);

} // namespace stenum
