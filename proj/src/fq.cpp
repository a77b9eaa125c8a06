#include "ffmobius/fq.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "ffmobius/errors.hpp"

namespace ffmobius {

namespace {

constexpr int kMaxQ = 16;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal F_p[x] helpers used only to vet the field modulus. Coefficient
// vectors are constant-first and trimmed.
using PVec = std::vector<int>;

PVec ptrim(PVec a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PVec pmod(PVec a, const PVec& b, int p) {
    // b nonzero, monic not required: scale by inverse of leading coeff
    a = ptrim(std::move(a));
    int db = int(b.size()) - 1;
    int lead = b[db];
    int lead_inv = 1;
    for (int i = 1; i < p; ++i)
        if (lead * i % p == 1) { lead_inv = i; break; }
    while (int(a.size()) - 1 >= db && !a.empty()) {
        int da = int(a.size()) - 1;
        int f = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            int& c = a[da - db + i];
            c = ((c - f * b[i]) % p + p) % p;
        }
        a = ptrim(std::move(a));
    }
    return a;
}

bool modulus_irreducible(const PVec& m, int p) {
    int k = int(m.size()) - 1;
    if (k == 1) return true;
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            PVec cand(d + 1, 0);
            cand[d] = 1;
            long long t = idx;
            for (int i = 0; i < d; ++i) { cand[i] = int(t % p); t /= p; }
            if (pmod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

PVec default_modulus(int p, int k) {
    // lexicographically least monic irreducible of degree k, comparing
    // coefficients from leading down to constant
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
        // digit for x^{k-1} varies slowest: idx order = lex from leading down
        PVec cand(k + 1, 0);
        cand[k] = 1;
        long long t = idx;
        for (int i = 0; i < k; ++i) { cand[i] = int(t % p); t /= p; }
        if (modulus_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible modulus found");
}

} // namespace

Field Field::make(int p, int k, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::domain_error("field characteristic must be prime");
    if (k < 1) throw std::domain_error("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::domain_error("field order exceeds supported desk-scale range q <= 16");
    }
    if (int(modulus.size()) != k + 1) throw std::domain_error("modulus must have degree k");
    if (modulus.back() != 1) throw std::domain_error("modulus must be monic");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::domain_error("modulus coefficient out of range [0, p)");
    if (!modulus_irreducible(modulus, p)) throw std::domain_error("modulus is reducible over F_p");

    Field f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = int(q);
    f.mod_ = modulus;
    f.build_tables();
    return f;
}

Field Field::from_order(int q) {
    if (q < 2 || q > kMaxQ) throw std::domain_error("field order must be a prime power in [2, 16]");
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (!is_prime(p)) throw std::domain_error("field order is not a prime power");
    int k = 0;
    int t = q;
    while (t > 1) {
        if (t % p != 0) throw std::domain_error("field order is not a prime power");
        t /= p;
        ++k;
    }
    return make(p, k, default_modulus(p, k));
}

Field Field::parse(std::string_view token) {
    auto caret = token.find('^');
    if (caret == std::string_view::npos) {
        int q = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw std::domain_error("bad field token: " + std::string(token));
            q = q * 10 + (c - '0');
        }
        return from_order(q);
    }
    auto slash = token.find('/');
    if (slash == std::string_view::npos || slash < caret)
        throw std::domain_error("bad field token (expected p^k/c0,c1,...): " + std::string(token));
    int p = std::stoi(std::string(token.substr(0, caret)));
    int k = std::stoi(std::string(token.substr(caret + 1, slash - caret - 1)));
    std::vector<int> mod;
    std::string rest(token.substr(slash + 1));
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty()) throw std::domain_error("bad modulus coefficient list");
        mod.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make(p, k, mod);
}

std::string Field::token() const {
    std::string s = std::to_string(p_) + "^" + std::to_string(k_) + "/";
    for (size_t i = 0; i < mod_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mod_[i]);
    }
    return s;
}

void Field::build_tables() {
    const int q = q_;
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    inv_.assign(q, 0);
    neg_.assign(q, 0);
    trace_.assign(q, 0);
    psi_.assign(q, {1.0, 0.0});

    auto decode = [&](int idx) {
        std::vector<int> c(k_);
        for (int i = 0; i < k_; ++i) { c[i] = idx % p_; idx /= p_; }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + c[i];
        return idx;
    };

    for (int a = 0; a < q; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(k_);
        for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = fq_t(encode(cn));
        for (int b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(k_);
            for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[a * q + b] = fq_t(encode(cs));

            // multiply in F_p[x] then reduce by the modulus
            std::vector<int> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            for (int d = 2 * k_ - 2; d >= k_; --d) {
                int f = prod[d];
                if (f == 0) continue;
                for (int i = 0; i <= k_; ++i)
                    prod[d - k_ + i] = ((prod[d - k_ + i] - f * mod_[i]) % p_ + p_) % p_;
            }
            prod.resize(k_);
            mul_[a * q + b] = fq_t(encode(prod));
        }
    }

    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) { inv_[a] = fq_t(b); break; }

    for (int a = 0; a < q; ++a) {
        // tr(x) = x + x^p + ... + x^{p^{k-1}}, lands in the prime subfield
        fq_t acc = 0;
        fq_t xp = fq_t(a);
        for (int i = 0; i < k_; ++i) {
            acc = add_[acc * q + xp];
            fq_t next = xp;
            for (int j = 1; j < p_; ++j) next = mul_[next * q + xp];
            xp = next;
        }
        if (acc >= p_) throw std::logic_error("trace left the prime subfield");
        trace_[a] = acc;
        double angle = 2.0 * std::numbers::pi * double(acc) / double(p_);
        psi_[a] = {std::cos(angle), std::sin(angle)};
    }
    psi_[0] = {1.0, 0.0};
}

fq_t Field::inv(fq_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero in F_q");
    return inv_[a];
}

fq_t Field::pow(fq_t a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    fq_t r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

fq_t Field::element(int index) const {
    if (index < 0 || index >= q_) throw std::domain_error("element index out of range");
    return fq_t(index);
}

fq_t Field::from_coeffs(const std::vector<int>& c) const {
    if (int(c.size()) > k_) throw std::domain_error("too many coordinates");
    int idx = 0;
    for (int i = std::min<int>(k_, int(c.size())) - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p_) throw std::domain_error("coordinate out of range [0, p)");
        idx = idx * p_ + c[i];
    }
    return fq_t(idx);
}

std::vector<int> Field::coeffs_of(fq_t a) const {
    std::vector<int> c(k_);
    int idx = a;
    for (int i = 0; i < k_; ++i) { c[i] = idx % p_; idx /= p_; }
    return c;
}

} // namespace ffmobius
