#ifndef FFMOBIUS_BOUNDS_HPP
#define FFMOBIUS_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ffmobius/poly.hpp"

namespace ffmobius {

// One numeric comparison: verdict = (lhs <= rhs) for inequality checks,
// exact equality for equality checks. Informational checks are reported but
// never fail a suite.
struct BoundCheck {
    std::string name;
    std::string params;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    bool informational = false;
};

// sum_{d | g} q^{-deg d} <= (1 + log(deg g)/log q) e for squarefree monic g
// of degree >= 1. The divisor sum is enumerated directly.
BoundCheck lemma4_divisor_sum(const PolyRing& R, const Poly& g);

// sum_{k | N} k pi(k) = q^N, exact integer arithmetic.
BoundCheck pnt_identity(const PolyRing& R, int N);

// sqrt(2 pi) k^{k+1/2} e^{-k+1/(12k+1)} < k! < sqrt(2 pi) k^{k+1/2} e^{-k+1/(12k)},
// evaluated in log space; returns (lower, upper) checks.
std::pair<BoundCheck, BoundCheck> robbins_bounds(int k);

// The binomial reduction chain with k = [n/2]:
//   C(n - deg_d + s + deg_g - 2, s + deg_g - 2) <= C(2n - [n/2] - 2, n - [n/2] - 2)
//   C(2n - [n/2] - 2, n - [n/2] - 2) < C(3k, k)
//   C(3k, k) < (1/sqrt(2 pi)) e^{1/36k - 1/(12k+1) - 1/(24k+1)} (3k)^{3k+1/2} / (k^{k+1/2} (2k)^{2k+1/2})
//   middle < (1/sqrt(4 pi k/3)) (3 sqrt 3 / 2)^{2k}
// plus the standalone C(3k, k) < (1/sqrt(4 pi k/3)) (3 sqrt 3 / 2)^{2k}.
// Requires s + deg_g = n - [n/2], 0 <= deg_d <= deg_g, n >= 3.
std::vector<BoundCheck> binom_chain(int n, int s, int deg_g, int deg_d);

// 4 q^{(3n+1)/4} (3 sqrt 3 / 2)^n and its natural log.
double theorem_bound(int q, int n);
double theorem_bound_log(int q, int n);

// 4 q^{(3/4 + eps) n} and its natural log.
double remark_bound(int q, int n, double eps);
double remark_bound_log(int q, int n, double eps);

// theorem_bound <= remark_bound exactly when q^{eps n} >= q^{1/4} (3 sqrt 3/2)^n.
BoundCheck remark_check(int q, int n, double eps);
// (3 sqrt 3 / 2)^{1/eps}: above this q the remark bound dominates for all
// large n.
double remark_threshold(double eps);

// The end of the main estimate: q^{n - [n/2]/2} (1 + log n/log q) e / sqrt(2 pi (n-1)/3)
// times (3 sqrt 3/2)^n against the closed-form bound, in log space.
BoundCheck final_inequality(int q, int n);

// The printed comparison from the remark after the character-sum bound:
// (q+1) C(n + deg_g - 1, n) <= C(n + deg_g - 2, n) q^{n/2}. Reported
// informationally; it fails as printed.
BoundCheck lemma1_remark_check(int q, int n, int deg_g);

double binom_log(long long a, long long b); // log C(a, b) via lgamma

} // namespace ffmobius

#endif
