#include "ffmobius/hayes.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "ffmobius/errors.hpp"
#include "ffmobius/laurent.hpp"

namespace ffmobius {

namespace {
constexpr long long kOrderCap = 65536;
} // namespace

bool class_less(const UnitClass& a, const UnitClass& b) {
    if (a.residue != b.residue) return Poly::canon_less(a.residue, b.residue);
    return a.tail < b.tail;
}

std::string class_token(const UnitClass& u) {
    std::string s = u.residue.token() + "|";
    for (size_t i = 0; i < u.tail.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(u.tail[i]));
    }
    return s;
}

UnitClass class_key(const PolyRing& R, const Poly& f, const HayesModulus& m) {
    if (f.is_zero() || !f.is_monic()) throw std::domain_error("Hayes class of a non-monic polynomial");
    if (m.s < 0) throw std::domain_error("Hayes modulus needs s >= 0");
    UnitClass u;
    u.residue = R.mod(f, m.g);
    u.tail.resize(size_t(m.s));
    for (int i = 1; i <= m.s; ++i)
        u.tail[size_t(i - 1)] = f.coeff(f.degree() - i); // zero-padded below the constant term
    return u;
}

std::optional<UnitClass> canonical_class(const PolyRing& R, const Poly& f, const HayesModulus& m) {
    UnitClass u = class_key(R, f, m);
    if (!m.g.is_one() && !R.coprime(f, m.g)) return std::nullopt;
    return u;
}

UnitClass class_identity(const PolyRing& R, const HayesModulus& m) {
    UnitClass u;
    u.residue = R.mod(Poly::one(), m.g);
    u.tail.assign(size_t(m.s), 0);
    return u;
}

namespace {
// tails represent 1 + sum c_i t^{-i}; the product is the truncated series
// product.
std::vector<fq_t> tail_mul(const Field& F, const std::vector<fq_t>& a, const std::vector<fq_t>& b) {
    const int s = int(a.size());
    std::vector<fq_t> c(a.size(), 0);
    for (int k = 1; k <= s; ++k) {
        fq_t v = F.add(a[size_t(k - 1)], b[size_t(k - 1)]);
        for (int i = 1; i < k; ++i)
            v = F.add(v, F.mul(a[size_t(i - 1)], b[size_t(k - i - 1)]));
        c[size_t(k - 1)] = v;
    }
    return c;
}

std::vector<fq_t> tail_inv(const Field& F, const std::vector<fq_t>& a) {
    const int s = int(a.size());
    std::vector<fq_t> b(a.size(), 0);
    for (int k = 1; k <= s; ++k) {
        fq_t v = a[size_t(k - 1)];
        for (int i = 1; i < k; ++i)
            v = F.add(v, F.mul(a[size_t(i - 1)], b[size_t(k - i - 1)]));
        b[size_t(k - 1)] = F.neg(v);
    }
    return b;
}
} // namespace

UnitClass class_mul(const PolyRing& R, const UnitClass& u, const UnitClass& v, const HayesModulus& m) {
    if (int(u.tail.size()) != m.s || int(v.tail.size()) != m.s ||
        u.residue.degree() >= m.g.degree() || v.residue.degree() >= m.g.degree())
        throw std::domain_error("Hayes modulus mismatch in class_mul");
    UnitClass w;
    w.residue = R.mod(R.mul(u.residue, v.residue), m.g);
    w.tail = tail_mul(R.field(), u.tail, v.tail);
    return w;
}

UnitClass class_inv(const PolyRing& R, const UnitClass& u, const HayesModulus& m) {
    UnitClass w;
    w.residue = m.g.is_one() ? Poly() : R.inv_mod(u.residue, m.g);
    w.tail = tail_inv(R.field(), u.tail);
    return w;
}

namespace {
// The Laurent expansion of f/t^{deg f} down to t^{-prec} (exact when the
// window reaches the constant term of f).
Laurent normalized_expansion(const Poly& f, int prec) {
    const int d = f.degree();
    std::vector<fq_t> c(size_t(prec + 1), 0);
    for (int i = 0; i >= -prec; --i)
        c[size_t(-i)] = (d + i >= 0) ? f.coeff(d + i) : fq_t(0);
    return Laurent::from_window(0, std::move(c), prec, prec >= d);
}
} // namespace

bool raw_equivalent(const PolyRing& R, const Poly& a, const Poly& b, const HayesModulus& m) {
    if (a.is_zero() || b.is_zero() || !a.is_monic() || !b.is_monic())
        throw std::domain_error("raw relation needs monic polynomials");
    if (!R.mod(R.sub(a, b), m.g).is_zero()) return false;
    if (m.s == 0) return true;
    // |a/t^{deg a} - b/t^{deg b}| < q^{-s} holds exactly when every
    // coefficient of the difference at t^0 .. t^{-s} vanishes
    Laurent diff = sub(R.field(), normalized_expansion(a, m.s), normalized_expansion(b, m.s));
    return diff.window_zero();
}

std::pair<std::vector<Poly>, std::vector<Poly>> representatives(const PolyRing& R,
                                                                const HayesModulus& m, int n) {
    if (m.s < 0) throw std::domain_error("representatives need s >= 0");
    const int e = n - m.s - m.g.degree();
    if (e < 0) throw std::domain_error("representatives need n >= s + deg g");
    std::vector<Poly> all, reduced;
    const Poly shift = Poly::t_pow(e);
    R.for_each_monic(m.s, [&](const Poly& b1) {
        Poly base = R.mul(R.mul(shift, m.g), b1);
        // b2 runs over every polynomial of degree < deg g
        long long count = 1;
        for (int i = 0; i < m.g.degree(); ++i) count *= R.q();
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<fq_t> c(size_t(std::max(m.g.degree(), 1)), 0);
            long long t = idx;
            for (int i = 0; i < m.g.degree(); ++i) { c[size_t(i)] = fq_t(t % R.q()); t /= R.q(); }
            Poly b2 = Poly::from_coeffs(std::move(c));
            Poly rep = R.add(base, b2);
            all.push_back(rep);
            if (m.g.is_one() || R.coprime(b2, m.g)) reduced.push_back(rep);
        }
    });
    std::sort(all.begin(), all.end(), Poly::canon_less);
    std::sort(reduced.begin(), reduced.end(), Poly::canon_less);
    return {std::move(all), std::move(reduced)};
}

std::string HayesCharacter::token() const {
    std::string s;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents[i]);
    }
    return s.empty() ? "0" : s;
}

namespace {

using MulFn = std::function<UnitClass(const UnitClass&, const UnitClass&)>;

UnitClass pow_elem(const MulFn& mul, const UnitClass& id, UnitClass base, long long e) {
    UnitClass r = id;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

long long order_of(const MulFn& mul, const UnitClass& id, const UnitClass& x) {
    long long k = 1;
    UnitClass y = x;
    while (!(y == id)) {
        y = mul(y, x);
        ++k;
        if (k > kOrderCap) throw std::logic_error("element order exceeded the group cap");
    }
    return k;
}

// Invariant-factor decomposition of an abelian p-group given by its element
// list: extract a maximal-order element, decompose the quotient by it, and
// lift the quotient generators to elements of the same order.
std::vector<std::pair<UnitClass, long long>> decompose_p_group(
    std::vector<UnitClass> elems, const MulFn& mul, const UnitClass& id) {
    std::sort(elems.begin(), elems.end(), class_less);
    if (elems.size() <= 1) return {};

    long long best_ord = 0;
    UnitClass a = id;
    for (const auto& x : elems) {
        long long o = order_of(mul, id, x);
        if (o > best_ord) { best_ord = o; a = x; }
    }

    // cyclic subgroup <a> with discrete logs
    std::map<std::string, long long> dlog_a;
    UnitClass cur = id;
    for (long long j = 0; j < best_ord; ++j) {
        dlog_a[class_token(cur)] = j;
        cur = mul(cur, a);
    }

    // canonical coset representatives for the quotient by <a>
    std::map<std::string, UnitClass> rep_of;
    std::vector<UnitClass> reps;
    for (const auto& x : elems) {
        if (rep_of.count(class_token(x))) continue;
        UnitClass best = x;
        std::vector<UnitClass> coset;
        UnitClass y = x;
        for (long long j = 0; j < best_ord; ++j) {
            coset.push_back(y);
            if (class_less(y, best)) best = y;
            y = mul(y, a);
        }
        for (const auto& z : coset) rep_of[class_token(z)] = best;
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end(), class_less);

    MulFn mulq = [&rep_of, &mul](const UnitClass& x, const UnitClass& y) {
        return rep_of.at(class_token(mul(x, y)));
    };
    UnitClass idq = rep_of.at(class_token(id));

    auto sub = decompose_p_group(reps, mulq, idq);

    std::vector<std::pair<UnitClass, long long>> out;
    out.emplace_back(a, best_ord);
    for (const auto& [xbar, mord] : sub) {
        // x^m lies in <a>; its log is divisible by m, so x * a^{-c/m} has
        // order exactly m and projects to xbar
        UnitClass xm = pow_elem(mul, id, xbar, mord);
        long long c = dlog_a.at(class_token(xm));
        if (c % mord != 0) throw std::logic_error("abelian lift failed (log not divisible)");
        long long shift = (best_ord - c / mord) % best_ord;
        UnitClass y = mul(xbar, pow_elem(mul, id, a, shift));
        if (order_of(mul, id, y) != mord) throw std::logic_error("abelian lift has wrong order");
        out.emplace_back(y, mord);
    }
    return out;
}

std::vector<std::pair<UnitClass, long long>> decompose_abelian(
    const std::vector<UnitClass>& elems, const MulFn& mul, const UnitClass& id) {
    const long long N = (long long)elems.size();
    if (N <= 1) return {};
    // primary decomposition over the primes of N
    std::vector<std::pair<long long, long long>> primes; // (p, p^e)
    long long n = N;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long long pe = 1;
        while (n % p == 0) { n /= p; pe *= p; }
        primes.emplace_back(p, pe);
    }
    if (n > 1) primes.emplace_back(n, n);

    std::vector<std::vector<std::pair<UnitClass, long long>>> parts;
    for (auto [p, pe] : primes) {
        long long m = N / pe;
        std::vector<UnitClass> sylow;
        for (const auto& x : elems) sylow.push_back(pow_elem(mul, id, x, m));
        std::sort(sylow.begin(), sylow.end(), class_less);
        sylow.erase(std::unique(sylow.begin(), sylow.end()), sylow.end());
        parts.push_back(decompose_p_group(std::move(sylow), mul, id));
    }

    // CRT-combine the i-th cyclic factor of every primary part
    size_t width = 0;
    for (const auto& part : parts) width = std::max(width, part.size());
    std::vector<std::pair<UnitClass, long long>> out;
    for (size_t i = 0; i < width; ++i) {
        UnitClass gen = id;
        long long ord = 1;
        for (const auto& part : parts) {
            if (i >= part.size()) continue;
            gen = mul(gen, part[i].first);
            ord *= part[i].second;
        }
        out.emplace_back(std::move(gen), ord);
    }
    return out;
}

} // namespace

UnitGroup::UnitGroup(const PolyRing& R, HayesModulus m) : m_(std::move(m)) {
    if (m_.s < 0) throw std::domain_error("Hayes modulus needs s >= 0");
    if (m_.g.is_zero() || !m_.g.is_monic()) throw std::domain_error("Hayes modulus needs monic g");

    long long phi = R.euler_phi(m_.g);
    long long qs = 1;
    for (int i = 0; i < m_.s; ++i) {
        qs *= R.q();
        if (qs > kOrderCap) throw ResourceError("unit group order exceeds the desk-scale cap");
    }
    order_ = qs * phi;
    if (order_ > kOrderCap) throw ResourceError("unit group order exceeds the desk-scale cap");

    const HayesModulus& mod = m_;
    MulFn mul = [&R, &mod](const UnitClass& a, const UnitClass& b) {
        return class_mul(R, a, b, mod);
    };
    UnitClass id = class_identity(R, m_);

    // residue factor embedded with identity tail
    std::vector<UnitClass> residue_elems;
    if (m_.g.degree() == 0) {
        residue_elems.push_back(id);
    } else {
        long long count = 1;
        for (int i = 0; i < m_.g.degree(); ++i) count *= R.q();
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<fq_t> c(size_t(m_.g.degree()), 0);
            long long t = idx;
            for (int i = 0; i < m_.g.degree(); ++i) { c[size_t(i)] = fq_t(t % R.q()); t /= R.q(); }
            Poly r = Poly::from_coeffs(std::move(c));
            if (r.is_zero() || !R.coprime(r, m_.g)) continue;
            residue_elems.push_back(UnitClass{r, std::vector<fq_t>(size_t(m_.s), 0)});
        }
    }
    std::sort(residue_elems.begin(), residue_elems.end(), class_less);

    // tail factor embedded with identity residue
    std::vector<UnitClass> tail_elems;
    {
        long long count = qs;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<fq_t> tail(size_t(m_.s), 0);
            long long t = idx;
            for (int i = m_.s - 1; i >= 0; --i) { tail[size_t(i)] = fq_t(t % R.q()); t /= R.q(); }
            tail_elems.push_back(UnitClass{id.residue, std::move(tail)});
        }
    }
    std::sort(tail_elems.begin(), tail_elems.end(), class_less);

    auto res_part = decompose_abelian(residue_elems, mul, id);
    auto tail_part = decompose_abelian(tail_elems, mul, id);
    for (auto& [g, o] : res_part) { gens_.push_back(g); gen_orders_.push_back(o); }
    for (auto& [g, o] : tail_part) { gens_.push_back(g); gen_orders_.push_back(o); }

    // enumerate the whole group by exponent odometer, recording dlogs
    long long expected = order_;
    std::vector<int> exps(gens_.size(), 0);
    std::map<std::string, std::pair<UnitClass, std::vector<int>>> table;
    std::function<void(size_t, const UnitClass&)> walk = [&](size_t i, const UnitClass& acc) {
        if (i == gens_.size()) {
            table.emplace(class_token(acc), std::make_pair(acc, exps));
            return;
        }
        UnitClass cur = acc;
        for (int e = 0; e < gen_orders_[i]; ++e) {
            exps[i] = e;
            walk(i + 1, cur);
            if (e + 1 < gen_orders_[i]) cur = mul(cur, gens_[i]);
        }
        exps[i] = 0;
    };
    walk(0, id);
    if ((long long)table.size() != expected)
        throw std::logic_error("unit group decomposition does not span the group");

    elems_.reserve(table.size());
    dlogs_.reserve(table.size());
    for (auto& [token, entry] : table) {
        index_.emplace(token, int(elems_.size()));
        elems_.push_back(entry.first);
        dlogs_.push_back(entry.second);
    }
}

const std::vector<int>& UnitGroup::dlog(const UnitClass& u) const {
    return dlogs_[size_t(element_index(u))];
}

int UnitGroup::element_index(const UnitClass& u) const {
    auto it = index_.find(class_token(u));
    if (it == index_.end()) throw std::domain_error("class is not a unit of this modulus");
    return it->second;
}

std::vector<HayesCharacter> UnitGroup::characters() const {
    std::vector<HayesCharacter> out;
    out.reserve(size_t(order_));
    std::vector<int> exps(gens_.size(), 0);
    std::function<void(size_t)> walk = [&](size_t i) {
        if (i == gens_.size()) {
            out.push_back(HayesCharacter{exps});
            return;
        }
        for (int e = 0; e < gen_orders_[i]; ++e) {
            exps[i] = e;
            walk(i + 1);
        }
        exps[i] = 0;
    };
    walk(0);
    return out;
}

std::complex<double> UnitGroup::eval(const HayesCharacter& chi, const UnitClass& u) const {
    return eval_at(chi, element_index(u));
}

std::complex<double> UnitGroup::eval_at(const HayesCharacter& chi, int element_index) const {
    if (chi.exponents.size() != gens_.size())
        throw std::domain_error("character exponent vector has wrong length");
    const auto& v = dlogs_[size_t(element_index)];
    double angle = 0.0;
    for (size_t i = 0; i < gens_.size(); ++i) {
        long long e = ((chi.exponents[i] % gen_orders_[i]) + gen_orders_[i]) % gen_orders_[i];
        long long prod = (e * v[i]) % gen_orders_[i];
        angle += double(prod) / double(gen_orders_[i]);
    }
    if (angle == 0.0) return {1.0, 0.0};
    double a = 2.0 * std::numbers::pi * angle;
    return {std::cos(a), std::sin(a)};
}

std::complex<double> UnitGroup::eval_poly(const PolyRing& R, const HayesCharacter& chi, const Poly& f) const {
    auto u = canonical_class(R, f, m_);
    if (!u) return {0.0, 0.0};
    return eval(chi, *u);
}

} // namespace ffmobius
