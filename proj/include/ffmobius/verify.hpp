#ifndef FFMOBIUS_VERIFY_HPP
#define FFMOBIUS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffmobius/bounds.hpp"
#include "ffmobius/expsum.hpp"
#include "ffmobius/fq.hpp"

namespace ffmobius::verify {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> notes; // failure details (capped) and info lines
    double seconds = 0.0;

    bool pass() const { return failures == 0; }
    void fail(const std::string& detail);
};

// Character additivity, trace linearity and surjectivity, psi orthogonality,
// field axioms (exhaustive at q <= 16).
SuiteResult fq_properties(const Field& F);

// For every truncated theta (coefficients through t^{-(n+1)}), n = 1..n_max:
// exhaustive search over all pairs (a, g) with deg a < deg g <= n/2 finds
// exactly one admissible pair, and approx returns it.
SuiteResult lemma2_uniqueness(const Field& F, int n_max);

// e_q is constant on R_{s,g}-classes of degree-n monic polynomials, all theta.
SuiteResult lemma3_suite(const Field& F, const std::vector<int>& ns);

// decomposition_sum equals brute_sum, exhaustively over theta or on seeded
// random theta.
SuiteResult oracle_equality(const Field& F, const std::vector<int>& ns, bool exhaustive,
                            int random_count, std::uint64_t seed, double tol);

// Mobius-character sums by enumeration and by L-series inversion agree and
// respect the character-sum bound, across the modulus grid.
SuiteResult lemma1_suite(const Field& F, int deg_g_max, int s_max, int n_max,
                         long long order_cap, double tol);

// All inverse roots of nontrivial L-polynomials sit on |alpha| = 1 or
// sqrt(q); coefficients beyond the degree bound vanish.
SuiteResult weil_suite(const Field& F, int deg_g_max, int s_max, long long order_cap,
                       double root_tol, double coeff_tol);

// Row and column orthogonality of the character tables.
SuiteResult orthogonality_suite(const Field& F, int deg_g_max, int s_max,
                                long long order_cap, double tol);

// Gauss-sum bound sum_chi |G| <= (q^s phi(g/d))^{3/2} and the Parseval
// identity sum_chi |G|^2 = (q^s phi(g/d))^2 on the oracle-equality runs.
SuiteResult gauss_suite(const Field& F, const std::vector<int>& ns, bool exhaustive,
                        int random_count, std::uint64_t seed, double tol);

// Divisor-sum bound over every squarefree monic g of degree 1..deg_g_max and
// the exact prime-counting identity sum_{k|N} k pi(k) = q^N.
SuiteResult lemma4_suite(const Field& F, int deg_g_max, int pnt_N_max);

// Robbins sandwich, the binomial reduction chain, the closing inequality of
// the main estimate on the (n, q) grid, and the remark threshold.
SuiteResult bounds_suite(int chain_n_max, int final_n_max, int robbins_k_max);

// The full list of comparisons the bounds suite evaluates, for CSV emission.
std::vector<BoundCheck> bound_check_catalog(int chain_n_max, int final_n_max, int robbins_k_max);

// Exhaustive scans with the closed-form bound verdict.
SuiteResult scan_suite(const Field& F, int n_lo, int n_hi, const ScanOptions& opt);

// Classes induced by the invariant pair coincide with the raw two-condition
// relation (anchored within classes, all pairs across class anchors).
SuiteResult partition_suite(const Field& F, int n_max);

// The default desk-scale bundle for a field.
std::vector<SuiteResult> run_default(const Field& F);

} // namespace ffmobius::verify

#endif
