#include "ffmobius/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffmobius/errors.hpp"

namespace ffmobius {

namespace {
void normalize(std::vector<fq_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
} // namespace

Poly Poly::from_coeffs(std::vector<fq_t> c) {
    normalize(c);
    Poly p;
    p.c_ = std::move(c);
    return p;
}

Poly Poly::constant(fq_t c) {
    return from_coeffs({c});
}

Poly Poly::t_pow(int e, fq_t lead) {
    if (e < 0) throw std::domain_error("negative power of t");
    std::vector<fq_t> c(e + 1, 0);
    c[e] = lead;
    return from_coeffs(std::move(c));
}

bool Poly::canon_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::string Poly::token() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(c_[i]));
    }
    return s;
}

Poly Poly::parse(std::string_view token, const Field& f) {
    std::vector<fq_t> c;
    std::string rest(token);
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty()) throw std::domain_error("bad polynomial token: " + rest);
        int v = std::stoi(piece);
        if (v < 0 || v >= f.q()) throw std::domain_error("coefficient out of range for field: " + piece);
        c.push_back(fq_t(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_coeffs(std::move(c));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
    std::vector<fq_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f_.add(a.coeff(int(i)), b.coeff(int(i)));
    return Poly::from_coeffs(std::move(c));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
    std::vector<fq_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f_.sub(a.coeff(int(i)), b.coeff(int(i)));
    return Poly::from_coeffs(std::move(c));
}

Poly PolyRing::neg(const Poly& a) const {
    std::vector<fq_t> c(a.coeffs());
    for (auto& x : c) x = f_.neg(x);
    return Poly::from_coeffs(std::move(c));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<fq_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        fq_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f_.add(c[i + j], f_.mul(ai, b.coeffs()[j]));
    }
    return Poly::from_coeffs(std::move(c));
}

Poly PolyRing::mul_scalar(const Poly& a, fq_t s) const {
    std::vector<fq_t> c(a.coeffs());
    for (auto& x : c) x = f_.mul(x, s);
    return Poly::from_coeffs(std::move(c));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<fq_t> rem(a.coeffs());
    std::vector<fq_t> quo(a.degree() - b.degree() + 1, 0);
    fq_t lead_inv = f_.inv(b.lead());
    for (int d = a.degree(); d >= b.degree(); --d) {
        fq_t c = rem[d];
        if (c == 0) continue;
        fq_t fac = f_.mul(c, lead_inv);
        quo[d - b.degree()] = fac;
        for (int i = 0; i <= b.degree(); ++i)
            rem[d - b.degree() + i] = f_.sub(rem[d - b.degree() + i], f_.mul(fac, b.coeff(i)));
    }
    return {Poly::from_coeffs(std::move(quo)), Poly::from_coeffs(std::move(rem))};
}

Poly PolyRing::div_exact(const Poly& a, const Poly& b) const {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("non-exact polynomial division");
    return q;
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = y;
        y = r;
    }
    return make_monic(x);
}

Poly PolyRing::inv_mod(const Poly& a, const Poly& g) const {
    // extended Euclid: find u with u*a = 1 mod g
    Poly r0 = g, r1 = mod(a, g);
    Poly u0 = Poly(), u1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
    }
    if (r0.degree() != 0) throw std::domain_error("element not invertible modulo g");
    return mod(mul_scalar(u0, f_.inv(r0.lead())), g);
}

Poly PolyRing::derivative(const Poly& a) const {
    if (a.degree() < 1) return Poly();
    std::vector<fq_t> c(a.degree(), 0);
    for (int i = 1; i <= a.degree(); ++i) {
        fq_t m = 0;
        for (int j = 0; j < i % f_.p(); ++j) m = f_.add(m, 1); // i mod p as field element
        c[i - 1] = f_.mul(a.coeff(i), m);
    }
    return Poly::from_coeffs(std::move(c));
}

Poly PolyRing::make_monic(const Poly& a) const {
    if (a.is_zero() || a.is_monic()) return a;
    return mul_scalar(a, f_.inv(a.lead()));
}

fq_t PolyRing::eval(const Poly& a, fq_t x) const {
    fq_t r = 0;
    for (int i = a.degree(); i >= 0; --i)
        r = f_.add(f_.mul(r, x), a.coeff(i));
    return r;
}

bool PolyRing::coprime(const Poly& a, const Poly& b) const {
    if (a.is_zero() && b.is_zero()) return false;
    return gcd(a, b).is_one();
}

bool PolyRing::is_squarefree(const Poly& f) const {
    if (f.is_zero()) throw std::domain_error("squarefree test of zero");
    if (f.degree() == 0) return true;
    Poly d = derivative(f);
    if (d.is_zero()) return false; // f = h(t^p) is a p-th power
    return gcd(f, d).is_one();
}

const std::vector<Poly>& PolyRing::irreducibles(int d) const {
    if (d < 1) throw std::domain_error("irreducibles of degree < 1");
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = irr_cache_.find(d);
    if (it != irr_cache_.end()) return it->second;

    // make sure lower degrees are present (recursion would deadlock the mutex)
    for (int e = 1; e < d; ++e) {
        if (irr_cache_.count(e)) continue;
        std::vector<Poly> out;
        for (const Poly& f : monic_polys(e)) {
            bool irr = true;
            for (int dd = 1; 2 * dd <= e && irr; ++dd)
                for (const Poly& w : irr_cache_[dd]) {
                    if (mod(f, w).is_zero()) { irr = false; break; }
                }
            if (irr) out.push_back(f);
        }
        irr_cache_[e] = std::move(out);
    }
    std::vector<Poly> out;
    for (const Poly& f : monic_polys(d)) {
        bool irr = true;
        for (int dd = 1; 2 * dd <= d && irr; ++dd)
            for (const Poly& w : irr_cache_[dd]) {
                if (mod(f, w).is_zero()) { irr = false; break; }
            }
        if (irr) out.push_back(f);
    }
    return irr_cache_[d] = std::move(out);
}

bool PolyRing::is_irreducible(const Poly& f) const {
    if (f.degree() < 1) return false;
    Poly m = make_monic(f);
    for (int d = 1; 2 * d <= m.degree(); ++d)
        for (const Poly& w : irreducibles(d))
            if (mod(m, w).is_zero()) return false;
    return true;
}

Factorization PolyRing::factor(const Poly& f) const {
    if (f.is_zero()) throw std::domain_error("factorization of zero");
    Factorization out;
    out.unit = f.lead();
    Poly work = make_monic(f);
    for (int d = 1; 2 * d <= work.degree(); ++d) {
        for (const Poly& w : irreducibles(d)) {
            if (work.degree() < 2 * d) break;
            int mult = 0;
            while (true) {
                auto [q, r] = divmod(work, w);
                if (!r.is_zero()) break;
                work = q;
                ++mult;
            }
            if (mult > 0) out.factors.emplace_back(w, mult);
        }
    }
    if (work.degree() >= 1) out.factors.emplace_back(work, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return Poly::canon_less(a.first, b.first); });
    return out;
}

int PolyRing::mobius(const Poly& f) const {
    if (f.is_zero() || !f.is_monic()) throw std::domain_error("mobius requires a monic polynomial");
    if (f.is_one()) return 1;
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = mobius_cache_.find(f.coeffs());
        if (it != mobius_cache_.end()) return it->second;
    }
    auto fac = factor(f);
    int mu = (fac.factors.size() % 2 == 0) ? 1 : -1;
    for (const auto& [w, m] : fac.factors)
        if (m >= 2) { mu = 0; break; }
    std::lock_guard<std::mutex> lock(cache_mu_);
    mobius_cache_.emplace(f.coeffs(), mu);
    return mu;
}

long long PolyRing::euler_phi(const Poly& g) const {
    if (g.is_zero() || !g.is_monic()) throw std::domain_error("euler_phi requires a monic polynomial");
    long long phi = 1;
    for (const auto& [w, m] : factor(g).factors) {
        long long qd = 1;
        for (int i = 0; i < w.degree(); ++i) qd *= q();
        long long term = qd - 1;
        for (int i = 1; i < m; ++i) term *= qd;
        phi *= term;
    }
    return phi;
}

std::vector<Poly> PolyRing::divisors(const Poly& g) const {
    if (g.is_zero() || !g.is_monic()) throw std::domain_error("divisors requires a monic polynomial");
    auto fac = factor(g);
    std::vector<Poly> out{Poly::one()};
    for (const auto& [w, m] : fac.factors) {
        std::vector<Poly> next;
        next.reserve(out.size() * (m + 1));
        for (const Poly& d : out) {
            Poly cur = d;
            next.push_back(cur);
            for (int i = 1; i <= m; ++i) {
                cur = mul(cur, w);
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), Poly::canon_less);
    return out;
}

namespace {
int mobius_int(long long n) {
    int r = 1;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}
} // namespace

long long PolyRing::count_irreducibles(int k) const {
    if (k <= 0) throw std::domain_error("count_irreducibles requires k >= 1");
    if (double(k) * std::log2(double(q())) > 60)
        throw ResourceError("q^k too large for exact irreducible count");
    // pi(k) = (1/k) * sum_{d | k} mu(d) q^{k/d}
    long long total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        int mu = mobius_int(d);
        if (mu == 0) continue;
        long long pw = 1;
        for (int i = 0; i < k / d; ++i) pw *= q();
        total += mu * pw;
    }
    if (total % k != 0) throw std::logic_error("irreducible count not divisible by degree");
    return total / k;
}

void PolyRing::for_each_monic(int n, const std::function<void(const Poly&)>& fn) const {
    if (n < 0) throw std::domain_error("negative degree");
    const int Q = q();
    std::vector<fq_t> c(n + 1, 0);
    c[n] = 1;
    // lexicographic from the leading coefficient down: digit for t^{n-1}
    // varies slowest
    long long total = monic_count(n);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int i = 0; i < n; ++i) { c[i] = fq_t(t % Q); t /= Q; }
        fn(Poly::from_coeffs(c));
    }
}

std::vector<Poly> PolyRing::monic_polys(int n) const {
    std::vector<Poly> out;
    out.reserve(size_t(monic_count(n)));
    for_each_monic(n, [&](const Poly& f) { out.push_back(f); });
    return out;
}

long long PolyRing::monic_count(int n) const {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q();
        if (total > (1LL << 40)) throw ResourceError("monic enumeration too large");
    }
    return total;
}

} // namespace ffmobius
