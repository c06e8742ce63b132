#include "stenum/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace stenum {

static std::uint64_t pow3(int e) {
	std::uint64_t r = 1;
	while (e-- > 0) r *= 3;
	return r;
}

std::uint64_t maxStableModelsWidth2(int n) {
	if (n < 0 || n > 75) throw std::invalid_argument("maxStableModelsWidth2: n out of range");
	if (n == 1) return 1;
	switch (n % 3) {
		case 0: return pow3(n / 3);
		case 1: return 4 * pow3((n - 4) / 3);
		default: return 2 * pow3((n - 2) / 3);
	}
}

double splitGrowthRate(int t) {
	if (t < 2) throw std::invalid_argument("splitGrowthRate: need t >= 2");
	// f(x) = x^t - (x^(t-1) + ... + 1); f(1) = 1 - t < 0, f(2) = 1 > 0
	auto f = [t](double x) {
		double p = 1.0, sum = 0.0;
		for (int i = 0; i < t; ++i) {
			sum += p;
			p *= x;
		}
		return p - sum;
	};
	double lo = 1.0, hi = 2.0;
	while (hi - lo > 1e-9) {
		double mid = 0.5 * (lo + hi);
		(f(mid) < 0 ? lo : hi) = mid;
	}
	return 0.5 * (lo + hi);
}

std::uint64_t binomial(int n, int k) {
	if (k < 0 || k > n) return 0;
	if (k > n - k) k = n - k;
	std::uint64_t r = 1;
	for (int i = 1; i <= k; ++i) {
		r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
	}
	return r;
}

double modelCountLowerBound(int t, int n) {
	if (t < 2 || n < 0) throw std::invalid_argument("modelCountLowerBound: bad parameters");
	double base = double(binomial(2 * t - 1, t));
	return std::floor(std::pow(base, double(n) / double(2 * t - 1)));
}

} // namespace stenum
