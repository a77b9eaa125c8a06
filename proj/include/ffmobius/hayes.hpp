#ifndef FFMOBIUS_HAYES_HPP
#define FFMOBIUS_HAYES_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffmobius/poly.hpp"

namespace ffmobius {

// The congruence R_{s,g}: a ~ b iff g | a-b and the normalized leading
// expansions a/t^{deg a}, b/t^{deg b} agree through t^{-s}.
struct HayesModulus {
    int s = 0;
    Poly g; // monic
};

// A class of R_{s,g} as the invariant pair (residue mod g, normalized tail).
// tail[i-1] is the coefficient of t^{-i} of f/t^{deg f}, i = 1..s; for
// deg f < s the missing coefficients are zero.
struct UnitClass {
    Poly residue;             // deg < deg g
    std::vector<fq_t> tail;   // length s

    bool operator==(const UnitClass& o) const {
        return residue == o.residue && tail == o.tail;
    }
    bool operator!=(const UnitClass& o) const { return !(*this == o); }
};

bool class_less(const UnitClass& a, const UnitClass& b);
std::string class_token(const UnitClass& u);

// The invariant pair of any monic f (no coprimality requirement); two monic
// polynomials are R_{s,g}-equivalent iff their keys are equal.
UnitClass class_key(const PolyRing& R, const Poly& f, const HayesModulus& m);

// The class of f when f is a unit mod R_{s,g} (coprime to g); the non-unit
// marker is nullopt.
std::optional<UnitClass> canonical_class(const PolyRing& R, const Poly& f, const HayesModulus& m);

// Componentwise group law: residues multiply mod g, tails multiply as
// truncated series.
UnitClass class_identity(const PolyRing& R, const HayesModulus& m);
UnitClass class_mul(const PolyRing& R, const UnitClass& u, const UnitClass& v, const HayesModulus& m);
UnitClass class_inv(const PolyRing& R, const UnitClass& u, const HayesModulus& m);

// The direct check of the two-condition relation, used as an independent
// oracle against class_key.
bool raw_equivalent(const PolyRing& R, const Poly& a, const Poly& b, const HayesModulus& m);

// Representative sets for degree-n monic polynomials:
//   S    = { t^{n - s - deg g} g b1 + b2 : b1 monic of degree s, deg b2 < deg g }
//   S*   = the subset with (b2, g) = 1.
// |S| = q^{s + deg g}, |S*| = q^s phi(g); every monic f of degree n is
// equivalent to exactly one element of S.
std::pair<std::vector<Poly>, std::vector<Poly>> representatives(const PolyRing& R,
                                                                const HayesModulus& m, int n);

// A character of the unit group, addressed by exponents against the group's
// fixed generator list. The all-zero vector is the trivial character.
struct HayesCharacter {
    std::vector<int> exponents;

    bool trivial() const {
        for (int e : exponents)
            if (e != 0) return false;
        return true;
    }
    std::string token() const;
};

// The full unit group (R_{s,g})^* of order q^s phi(g), decomposed into
// cyclic generators: invariant factors of the residue factor followed by
// invariant factors of the tail factor. Deterministic given the canonical
// polynomial ordering. Construction caps the order at 65536.
class UnitGroup {
public:
    UnitGroup(const PolyRing& R, HayesModulus m);

    const HayesModulus& modulus() const { return m_; }
    long long order() const { return order_; }
    const std::vector<UnitClass>& generators() const { return gens_; }
    const std::vector<long long>& generator_orders() const { return gen_orders_; }
    // all units, in a fixed deterministic order
    const std::vector<UnitClass>& elements() const { return elems_; }
    // exponent vector of u against the generators
    const std::vector<int>& dlog(const UnitClass& u) const;
    int element_index(const UnitClass& u) const;
    const std::vector<int>& dlog_at(int element_index) const { return dlogs_[size_t(element_index)]; }

    std::vector<HayesCharacter> characters() const; // q^s phi(g) of them
    std::complex<double> eval(const HayesCharacter& chi, const UnitClass& u) const;
    std::complex<double> eval_at(const HayesCharacter& chi, int element_index) const;
    // lift to monic polynomials: 0 when gcd(f, g) != 1
    std::complex<double> eval_poly(const PolyRing& R, const HayesCharacter& chi, const Poly& f) const;

private:
    HayesModulus m_;
    long long order_ = 1;
    std::vector<UnitClass> gens_;
    std::vector<long long> gen_orders_;
    std::vector<UnitClass> elems_;
    std::vector<std::vector<int>> dlogs_;
    std::map<std::string, int> index_; // class token -> element index
};

} // namespace ffmobius

#endif
