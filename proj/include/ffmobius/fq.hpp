#ifndef FFMOBIUS_FQ_HPP
#define FFMOBIUS_FQ_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ffmobius {

// An element of F_q, stored as its index in [0, q). The index encodes the
// coordinate vector (c_0, ..., c_{k-1}) in the power basis of the field
// modulus as c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.
using fq_t = std::uint8_t;

// F_q = F_{p^k} with q <= 16, realized through precomputed operation tables.
// All arithmetic, the absolute trace to F_p, and the additive character
// psi(x) = e(tr(x)/p) live here. Instances are immutable after construction.
class Field {
public:
    // q given as a plain prime power; uses the default (lexicographically
    // least, compared from the leading coefficient down) irreducible modulus.
    static Field from_order(int q);

    // Explicit modulus, coefficients constant-first over Z/p, length k+1,
    // monic. Irreducibility over F_p is checked.
    static Field make(int p, int k, const std::vector<int>& modulus);

    // Accepts "q" or "p^k/c0,c1,...,ck".
    static Field parse(std::string_view token);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }
    std::string token() const; // canonical "p^k/c0,...,ck"

    fq_t zero() const { return 0; }
    fq_t one() const { return 1; }

    fq_t add(fq_t a, fq_t b) const { return add_[a * q_ + b]; }
    fq_t sub(fq_t a, fq_t b) const { return add_[a * q_ + neg_[b]]; }
    fq_t neg(fq_t a) const { return neg_[a]; }
    fq_t mul(fq_t a, fq_t b) const { return mul_[a * q_ + b]; }
    fq_t inv(fq_t a) const; // a != 0
    fq_t pow(fq_t a, long long e) const;

    // Absolute trace x + x^p + ... + x^{p^{k-1}}, as an integer in [0, p).
    int trace(fq_t a) const { return trace_[a]; }

    // psi(x) = exp(2*pi*i*trace(x)/p).
    std::complex<double> psi(fq_t a) const { return psi_[a]; }

    fq_t element(int index) const;                      // bounds-checked
    fq_t from_coeffs(const std::vector<int>& c) const;  // coordinates over Z/p
    std::vector<int> coeffs_of(fq_t a) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
    }

private:
    Field() = default;
    void build_tables();

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> mod_; // constant-first, length k+1, monic
    std::vector<fq_t> add_, mul_, inv_, neg_;
    std::vector<int> trace_;
    std::vector<std::complex<double>> psi_;
};

} // namespace ffmobius

#endif
