#ifndef FFMOBIUS_EXPSUM_HPP
#define FFMOBIUS_EXPSUM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ffmobius/hayes.hpp"
#include "ffmobius/laurent.hpp"
#include "ffmobius/lfunc.hpp"
#include "ffmobius/poly.hpp"

namespace ffmobius {

// One evaluation of S(theta) = sum_{deg f = n} mu(f) e_q(f theta).
struct ExpSumResult {
    std::string theta_token;
    int n = 0;
    std::complex<double> value{0.0, 0.0};
    std::string method; // "brute" or "decomposition"
    // the approximation pair and s actually used (decomposition only)
    std::optional<RationalFF> approx_pair;
    int s = 0;
};

struct ScanRow {
    std::string theta;
    std::complex<double> value{0.0, 0.0};
};

struct ScanReport {
    std::string field_token;
    int q = 0;
    int n = 0;
    std::vector<ScanRow> rows;
    double max_abs = 0.0;
    std::string argmax;
    double bound = 0.0;              // 4 q^{(3n+1)/4} (3 sqrt 3/2)^n
    std::string verdict;             // PASS / FAIL / OUT_OF_RANGE (n < 3)
    double ratio_max_over_qhalf = 0; // max / q^{n/2}
    bool sampled = false;
    long long points = 0;            // rows emitted
    long long theta_space = 0;       // q^{n+1}
};

struct ScanOptions {
    int jobs = 1;
    long long max_work = 100000000; // cap on q^{2n+1}
    std::optional<long long> sample;
    std::uint64_t seed = 0;
};

struct Lemma3Verdict {
    bool pass = true;
    long long classes = 0;
    long long pairs_checked = 0;
    long long violations = 0;
    bool exhaustive = true;
};

// Evaluates S(theta) both directly and through the character decomposition,
// caching mu tables, unit groups, representative sets and Mobius-character
// sums per modulus. Immutable field context; caches are mutex-guarded, so
// a single evaluator may serve parallel scans.
class SumEvaluator {
public:
    explicit SumEvaluator(Field f);

    const PolyRing& ring() const { return ring_; }
    const Field& field() const { return ring_.field(); }

    // Direct sum over all monic f of degree n. Guard: q^n <= 1e7; needs
    // theta known through t^{-(n+1)}.
    std::complex<double> brute_sum(const TorusPoint& theta, int n) const;

    // The orthogonality decomposition over squarefree d | g with the
    // approximation pair of theta. include_all_divisors keeps the mu(d) = 0
    // terms (they contribute nothing; used once as a cross-check).
    ExpSumResult decomposition_sum(const TorusPoint& theta, int n,
                                   bool include_all_divisors = false) const;

    // sum_{b in S*_{s, g/d}} e_q(b d theta) conj(chi(b)), with representatives
    // of degree rep_degree.
    std::complex<double> gauss_sum(const UnitGroup& G, const HayesCharacter& chi,
                                   const Poly& d, const TorusPoint& theta,
                                   int rep_degree) const;

    // e_q values are constant on R_{s,g}-classes of degree-n monic
    // polynomials; every member is compared against its class anchor, with a
    // literal all-pairs pass while q^n <= 1e4.
    Lemma3Verdict lemma3_check(const TorusPoint& theta, int n) const;

    // Exhaustive (or sampled) maximum of |S(theta)| over the q^{n+1} torus
    // truncations through t^{-(n+1)}.
    ScanReport scan_max(int n, const ScanOptions& opt) const;

    std::shared_ptr<const UnitGroup> unit_group(const HayesModulus& m) const;
    // cached per (modulus, extra divisor, degree): one value per character
    const std::vector<std::complex<double>>& mobius_sums(const UnitGroup& G, const Poly& extra,
                                                         int degree) const;
    const std::vector<std::int8_t>& mu_table(int n) const; // by monic enumeration index

    TorusPoint theta_from_index(int n, long long index) const; // n+1 digits, first varies slowest

private:
    PolyRing ring_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<std::int8_t>> mu_tables_;
    mutable std::map<std::string, std::shared_ptr<const UnitGroup>> groups_;
    mutable std::map<std::string, std::vector<std::complex<double>>> mobius_cache_;
};

} // namespace ffmobius

#endif
