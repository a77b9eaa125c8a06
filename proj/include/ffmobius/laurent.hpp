#ifndef FFMOBIUS_LAURENT_HPP
#define FFMOBIUS_LAURENT_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffmobius/poly.hpp"

namespace ffmobius {

// A truncated formal Laurent series in 1/t. Coefficients are known exactly
// on the window [-prec, top] (and are zero above top); below -prec they are
// unknown unless `exact` is set, in which case they are known to vanish.
// Every operation states its precision contract; under-precision throws
// PrecisionError rather than truncating silently.
class Laurent {
public:
    static Laurent zero(int prec, bool exact = true);
    static Laurent from_poly(const Poly& f, int prec);
    // coeffs[0] is the coefficient of t^top, descending.
    static Laurent from_window(int top, std::vector<fq_t> coeffs, int prec, bool exact);

    int top() const { return top_; }
    int prec() const { return prec_; }
    bool exact() const { return exact_; }

    // Coefficient of t^i. Known-zero above the window, stored inside it,
    // and below it zero when exact, otherwise a PrecisionError.
    fq_t coeff(int i) const;

    bool window_zero() const; // every known coefficient vanishes
    Laurent normalized() const; // trim leading zeros from the window

    const std::vector<fq_t>& window() const { return c_; }

private:
    Laurent() = default;
    int top_ = -2;    // window top; empty window is top_ = -prec_ - 1
    int prec_ = 1;
    bool exact_ = true;
    std::vector<fq_t> c_; // size top_ + prec_ + 1 (empty iff window empty)
};

Laurent add(const Field& F, const Laurent& x, const Laurent& y);
Laurent sub(const Field& F, const Laurent& x, const Laurent& y);
Laurent mul(const Field& F, const Laurent& x, const Laurent& y);
Laurent poly_mul(const Field& F, const Poly& f, const Laurent& x);

// |x| = q^j for the largest j with x_j != 0, 0 for the zero series.
double norm(const Field& F, const Laurent& x);
// The exponent j, or nullopt for a certified-zero series.
std::optional<int> norm_exponent(const Laurent& x);

// e_q(x) = psi(x_{-1}).
std::complex<double> eq_map(const Field& F, const Laurent& x);

// A reduced fraction a/g of polynomials with g monic and deg a < deg g,
// i.e. a point of the torus written as a rational function.
struct RationalFF {
    Poly num;
    Poly den;
};

// Normalizes to monic denominator and reduces by the gcd; checks
// deg num < deg den.
RationalFF make_rational(const PolyRing& R, Poly a, Poly g);
bool rational_eq(const PolyRing& R, const RationalFF& x, const RationalFF& y);

// Laurent expansion of a/g accurate down to t^{-prec}; exact when the
// expansion terminates within the window.
Laurent expand_rational(const PolyRing& R, const RationalFF& r, int prec);

// The series identified with its stored window: h / t^prec with
// h = sum_i x_i t^{prec+i}.
std::pair<Poly, int> window_fraction(const Laurent& x);

// norm exponent of theta - a/g computed exactly from the window fraction,
// nullopt when the difference is exactly zero.
std::optional<int> diff_norm_exponent(const PolyRing& R, const Laurent& theta,
                                      const Poly& a, const Poly& g);

struct Convergent {
    Poly num;   // a_k
    Poly den;   // g_k, monic, deg strictly increasing
    bool exact; // equals the series identified with the window
};

// Continued-fraction convergents of theta with denominator degree at most
// max_deg. Needs prec >= 2*max_deg + 1 unless theta is exact.
std::vector<Convergent> continued_fraction(const PolyRing& R, const Laurent& theta, int max_deg);

// The unique coprime pair (a, g), g monic, deg a < deg g <= n/2, with
// |theta - a/g| < q^{-(n/2 + deg g)}. Selection takes the last convergent
// with deg g <= n/2; the inequality is asserted afterwards. Needs theta in
// the torus (top <= -1) and prec >= n+1 unless exact.
RationalFF approx(const PolyRing& R, const Laurent& theta, int n);

// A point of the torus T: a Laurent series supported on negative powers.
class TorusPoint {
public:
    // coeffs[0] is the coefficient of t^{-1}; prec = coeffs.size().
    static TorusPoint from_coeffs(std::vector<fq_t> coeffs, bool exact = true);
    static TorusPoint zero(int prec);
    // "c1,c2,...,cP", zero-padded up to min_prec.
    static TorusPoint parse(const Field& F, std::string_view token, int min_prec);

    const Laurent& series() const { return s_; }
    int prec() const { return s_.prec(); }
    std::string token() const;

private:
    explicit TorusPoint(Laurent s) : s_(std::move(s)) {}
    Laurent s_;
};

} // namespace ffmobius

#endif
