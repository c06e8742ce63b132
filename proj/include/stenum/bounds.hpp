#pragma once

#include <cstdint>

namespace stenum {

/// Exact maximum number of stable models a width-2 program on n atoms can
/// have. Four-branch closed form; n must be in [0, 75] so the value fits.
std::uint64_t maxStableModelsWidth2(int n);

/// Largest real root of x^t = x^(t-1) + ... + x + 1: the branching growth
/// rate of the clause-split strategy on width-t programs. Bisection to 1e-9;
/// t >= 2.
double splitGrowthRate(int t);

/// Growth value floor(C(2t-1, t)^(n / (2t-1))) of the disjoint-copies
/// lower-bound family for width-t programs.
double modelCountLowerBound(int t, int n);

/// Binomial coefficient, exact in 64 bits for the desk-scale range used here.
std::uint64_t binomial(int n, int k);

} // namespace stenum
