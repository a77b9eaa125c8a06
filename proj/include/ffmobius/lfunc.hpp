#ifndef FFMOBIUS_LFUNC_HPP
#define FFMOBIUS_LFUNC_HPP

#include <complex>
#include <variant>
#include <vector>

#include "ffmobius/hayes.hpp"
#include "ffmobius/poly.hpp"

namespace ffmobius {

// L(u, chi) for a nontrivial character: a polynomial of degree at most
// s + deg g - 1, with the coefficients just beyond that bound computed and
// verified to vanish.
struct LPolynomial {
    std::vector<std::complex<double>> coeffs; // c_0 .. c_D, D = s + deg g - 1
    std::complex<double> beyond1{0.0, 0.0};   // c_{D+1}
    std::complex<double> beyond2{0.0, 0.0};   // c_{D+2}
    int s = 0;
    int deg_g = 0;
};

// L(u, chi_0) = 1/(1-qu) * prod_{omega | g} (1 - u^{deg omega}) over the
// distinct monic irreducible divisors of g.
struct TrivialLForm {
    Poly g;
    std::vector<int> omega_degrees;
};

using LFunction = std::variant<TrivialLForm, LPolynomial>;

// A character lifted to monic polynomials, optionally multiplied by the
// trivial character mod (s, extra): eval(f) = chi(f) * [gcd(f, extra) = 1].
struct CharRef {
    const UnitGroup* group = nullptr;
    HayesCharacter chi;
    Poly extra = Poly::one();
};

std::complex<double> char_ref_eval(const PolyRing& R, const CharRef& c, const Poly& f);

// Coefficient summation over all monic polynomials up to the degree bound
// (plus the two vanish-check degrees). Guard: q^{s + deg g_full} <= 1e6.
LFunction l_polynomial(const PolyRing& R, const CharRef& c);

// All characters of the group at once (same order as group.characters()),
// via per-class counts; much faster than per-character summation.
std::vector<LFunction> l_functions_batch(const PolyRing& R, const UnitGroup& G, const Poly& extra);

// Number of monic polynomials of degree n coprime to g, read off the closed
// form (exact integer, returned as double).
double trivial_coefficient(const PolyRing& R, const TrivialLForm& L, int n);

// Coefficient of u^n in 1/L: the Mobius-character sum over degree n.
std::complex<double> mobius_char_sum(const PolyRing& R, const LFunction& L, int n);

// The same value by direct enumeration of monic polynomials (independent
// route used for cross-checks).
std::complex<double> mobius_char_sum_direct(const PolyRing& R, const CharRef& c, int n);

// Direct-enumeration sums for every character at once: result[char][m] for
// m = 0..n_max.
std::vector<std::vector<std::complex<double>>> mobius_sums_batch(const PolyRing& R,
                                                                 const UnitGroup& G,
                                                                 const Poly& extra, int n_max);

struct RootInfo {
    std::complex<double> alpha;
    enum Class { kUnitCircle, kSqrtQCircle, kAnomalous } cls;
    double dist_unit = 0.0;
    double dist_sqrtq = 0.0;
};

struct InverseRootReport {
    std::vector<RootInfo> roots;
    int anomalous = 0;
    double reconstruction_error = 0.0; // max relative coefficient error of prod(1 - alpha_i u)
};

// Numerically locate the inverse roots of L and classify each against the
// circles |alpha| = 1 and |alpha| = sqrt(q).
InverseRootReport weil_check(const LPolynomial& L, int q, double tol = 1e-6);

// |sum_{deg f = n} mu(f) chi(f)| bounds: C(n+s+deg_g-2, s+deg_g-2) q^{n/2}
// for nontrivial chi (needs s + deg_g >= 2), C(n+r-1, r-1)(q+1) for the
// trivial character with r >= 1 distinct irreducible divisors of g. The
// degenerate trivial case r = 0 uses the empty-product convention
// C(n-1, -1) = [n == 0].
double lemma1_bound(int q, int n, int s, int deg_g, int r, bool trivial);

double binom_exact(long long a, long long b); // exact for small arguments

} // namespace ffmobius

#endif
