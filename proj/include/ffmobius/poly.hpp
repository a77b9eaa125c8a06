#ifndef FFMOBIUS_POLY_HPP
#define FFMOBIUS_POLY_HPP

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffmobius/fq.hpp"

namespace ffmobius {

// A polynomial over F_q, coefficients constant-first, always normalized
// (no stored zero leading coefficients; the zero polynomial is empty).
class Poly {
public:
    Poly() = default;
    static Poly from_coeffs(std::vector<fq_t> c);
    static Poly constant(fq_t c);
    static Poly one() { return constant(1); }
    static Poly t_pow(int e, fq_t lead = 1); // lead * t^e

    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    fq_t coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : fq_t(0); }
    fq_t lead() const { return c_.empty() ? fq_t(0) : c_.back(); }
    const std::vector<fq_t>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // canonical order: by degree, then coefficients from leading down to
    // constant, F_q elements ordered by index
    static bool canon_less(const Poly& a, const Poly& b);

    std::string token() const; // "c0,c1,..." ("0" for the zero polynomial)
    static Poly parse(std::string_view token, const Field& f);

private:
    std::vector<fq_t> c_;
};

// A complete factorization into monic irreducibles times a unit.
struct Factorization {
    std::vector<std::pair<Poly, int>> factors; // (monic irreducible, multiplicity)
    fq_t unit = 1;
};

// Arithmetic and multiplicative structure of F_q[t]. Holds the field and a
// per-degree cache of monic irreducibles (warmed lazily, mutex-guarded).
class PolyRing {
public:
    explicit PolyRing(Field f) : f_(std::move(f)) {}

    const Field& field() const { return f_; }
    int q() const { return f_.q(); }

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly mul_scalar(const Poly& a, fq_t c) const;
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const; // b != 0
    Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
    Poly div_exact(const Poly& a, const Poly& b) const; // requires b | a
    Poly gcd(const Poly& a, const Poly& b) const;       // monic result
    Poly inv_mod(const Poly& a, const Poly& g) const;   // a invertible mod g
    Poly derivative(const Poly& a) const;
    Poly make_monic(const Poly& a) const;
    fq_t eval(const Poly& a, fq_t x) const;

    bool is_irreducible(const Poly& f) const; // deg >= 1
    bool is_squarefree(const Poly& f) const;  // f != 0
    bool coprime(const Poly& a, const Poly& b) const;

    Factorization factor(const Poly& f) const;  // f != 0
    int mobius(const Poly& f) const;            // f monic, f != 0
    long long euler_phi(const Poly& g) const;   // g monic, g != 0
    std::vector<Poly> divisors(const Poly& g) const; // monic, canonical order
    long long count_irreducibles(int k) const;  // pi(k), k >= 1

    // Monic irreducibles of degree d, canonical order (cached).
    const std::vector<Poly>& irreducibles(int d) const;

    // Every monic polynomial of degree n, canonical order. The callback form
    // avoids materializing q^n polynomials.
    void for_each_monic(int n, const std::function<void(const Poly&)>& fn) const;
    std::vector<Poly> monic_polys(int n) const;
    long long monic_count(int n) const; // q^n

private:
    Field f_;
    mutable std::map<int, std::vector<Poly>> irr_cache_;
    mutable std::map<std::vector<fq_t>, int> mobius_cache_;
    mutable std::mutex cache_mu_;
};

} // namespace ffmobius

#endif
