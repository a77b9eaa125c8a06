#include "ffmobius/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ffmobius/errors.hpp"

namespace ffmobius {

namespace {

constexpr double kVanishSanity = 1e-6;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<int> distinct_irreducible_degrees(const PolyRing& R, const Poly& g) {
    std::vector<int> out;
    for (const auto& [w, m] : R.factor(g).factors) out.push_back(w.degree());
    std::sort(out.begin(), out.end());
    return out;
}

// prod_{omega} (1 - u^{deg omega}) expanded with integer coefficients
std::vector<long long> omega_product(const std::vector<int>& degs) {
    std::vector<long long> p{1};
    for (int d : degs) {
        std::vector<long long> n(p.size() + size_t(d), 0);
        for (size_t i = 0; i < p.size(); ++i) {
            n[i] += p[i];
            n[i + size_t(d)] -= p[i];
        }
        p = std::move(n);
    }
    return p;
}

} // namespace

std::complex<double> char_ref_eval(const PolyRing& R, const CharRef& c, const Poly& f) {
    if (!c.extra.is_one() && !R.coprime(f, c.extra)) return {0.0, 0.0};
    return c.group->eval_poly(R, c.chi, f);
}

LFunction l_polynomial(const PolyRing& R, const CharRef& c) {
    const UnitGroup& G = *c.group;
    Poly g_full = R.mul(G.modulus().g, c.extra);
    if (c.chi.trivial())
        return TrivialLForm{g_full, distinct_irreducible_degrees(R, g_full)};

    const int s = G.modulus().s;
    const int D = s + g_full.degree() - 1;
    if (double(s + g_full.degree()) * std::log2(double(R.q())) > std::log2(1e6))
        throw ResourceError("L-polynomial summation exceeds the term cap");

    LPolynomial L;
    L.s = s;
    L.deg_g = g_full.degree();
    L.coeffs.assign(size_t(D + 1), {0.0, 0.0});
    for (int m = 0; m <= D + 2; ++m) {
        std::complex<double> sum{0.0, 0.0};
        R.for_each_monic(m, [&](const Poly& f) { sum += char_ref_eval(R, c, f); });
        if (m <= D)
            L.coeffs[size_t(m)] = sum;
        else if (m == D + 1)
            L.beyond1 = sum;
        else
            L.beyond2 = sum;
    }
    if (std::abs(L.beyond1) > kVanishSanity || std::abs(L.beyond2) > kVanishSanity)
        throw std::logic_error("L-polynomial fails to terminate at its degree bound");
    return L;
}

std::vector<LFunction> l_functions_batch(const PolyRing& R, const UnitGroup& G, const Poly& extra) {
    Poly g_full = R.mul(G.modulus().g, extra);
    const int s = G.modulus().s;
    const int D = s + g_full.degree() - 1;
    if (double(s + g_full.degree()) * std::log2(double(R.q())) > std::log2(1e6))
        throw ResourceError("L-polynomial summation exceeds the term cap");

    auto chars = G.characters();
    const size_t nchars = chars.size();
    const size_t nelems = G.elements().size();

    // per-degree class counts, then one dot product per character
    std::vector<std::vector<std::complex<double>>> coeffs(nchars);
    for (auto& v : coeffs) v.assign(size_t(std::max(D + 3, 0)), {0.0, 0.0});

    for (int m = 0; m <= D + 2; ++m) {
        std::vector<long long> cnt(nelems, 0);
        R.for_each_monic(m, [&](const Poly& f) {
            if (!extra.is_one() && !R.coprime(f, extra)) return;
            auto u = canonical_class(R, f, G.modulus());
            if (!u) return;
            cnt[size_t(G.element_index(*u))]++;
        });
        for (size_t ci = 0; ci < nchars; ++ci) {
            std::complex<double> sum{0.0, 0.0};
            for (size_t ei = 0; ei < nelems; ++ei)
                if (cnt[ei]) sum += double(cnt[ei]) * G.eval_at(chars[ci], int(ei));
            coeffs[ci][size_t(m)] = sum;
        }
    }

    std::vector<LFunction> out;
    out.reserve(nchars);
    auto omega = distinct_irreducible_degrees(R, g_full);
    for (size_t ci = 0; ci < nchars; ++ci) {
        if (chars[ci].trivial()) {
            out.emplace_back(TrivialLForm{g_full, omega});
            continue;
        }
        LPolynomial L;
        L.s = s;
        L.deg_g = g_full.degree();
        L.coeffs.assign(coeffs[ci].begin(), coeffs[ci].begin() + (D + 1));
        L.beyond1 = coeffs[ci][size_t(D + 1)];
        L.beyond2 = coeffs[ci][size_t(D + 2)];
        if (std::abs(L.beyond1) > kVanishSanity || std::abs(L.beyond2) > kVanishSanity)
            throw std::logic_error("L-polynomial fails to terminate at its degree bound");
        out.emplace_back(std::move(L));
    }
    return out;
}

double trivial_coefficient(const PolyRing& R, const TrivialLForm& L, int n) {
    // [u^n] (1/(1-qu)) * prod(1 - u^{deg omega})
    auto p = omega_product(L.omega_degrees);
    double sum = 0.0;
    for (size_t j = 0; j < p.size() && int(j) <= n; ++j)
        sum += double(p[j]) * double(ipow(R.q(), n - int(j)));
    return sum;
}

std::complex<double> mobius_char_sum(const PolyRing& R, const LFunction& L, int n) {
    if (n < 0) throw std::domain_error("negative degree");
    if (std::holds_alternative<TrivialLForm>(L)) {
        // 1/L = (1 - qu) * prod_omega (1 + u^{deg omega} + u^{2 deg omega} + ...)
        const auto& T = std::get<TrivialLForm>(L);
        std::vector<double> arr(size_t(n + 1), 0.0);
        arr[0] = 1.0;
        if (n >= 1) arr[1] = -double(R.q());
        for (int d : T.omega_degrees) {
            std::vector<double> nxt(arr.size(), 0.0);
            for (int j = 0; j <= n; ++j) {
                double v = 0.0;
                for (int k = j; k >= 0; k -= d) {
                    v += arr[size_t(k)];
                    if (d == 0) break;
                }
                nxt[size_t(j)] = v;
            }
            arr = std::move(nxt);
        }
        return {arr[size_t(n)], 0.0};
    }
    const auto& P = std::get<LPolynomial>(L);
    const int D = int(P.coeffs.size()) - 1;
    std::vector<std::complex<double>> b(size_t(n + 1), {0.0, 0.0});
    b[0] = 1.0 / P.coeffs[0];
    for (int j = 1; j <= n; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (int k = 1; k <= std::min(j, D); ++k) acc += P.coeffs[size_t(k)] * b[size_t(j - k)];
        b[size_t(j)] = -acc / P.coeffs[0];
    }
    return b[size_t(n)];
}

std::complex<double> mobius_char_sum_direct(const PolyRing& R, const CharRef& c, int n) {
    std::complex<double> sum{0.0, 0.0};
    R.for_each_monic(n, [&](const Poly& f) {
        int mu = R.mobius(f);
        if (mu == 0) return;
        sum += double(mu) * char_ref_eval(R, c, f);
    });
    return sum;
}

std::vector<std::vector<std::complex<double>>> mobius_sums_batch(const PolyRing& R,
                                                                 const UnitGroup& G,
                                                                 const Poly& extra, int n_max) {
    auto chars = G.characters();
    const size_t nchars = chars.size();
    const size_t nelems = G.elements().size();
    std::vector<std::vector<std::complex<double>>> out(nchars);
    for (auto& v : out) v.assign(size_t(n_max + 1), {0.0, 0.0});

    for (int m = 0; m <= n_max; ++m) {
        std::vector<long long> w(nelems, 0);
        R.for_each_monic(m, [&](const Poly& f) {
            if (!extra.is_one() && !R.coprime(f, extra)) return;
            auto u = canonical_class(R, f, G.modulus());
            if (!u) return;
            int mu = R.mobius(f);
            if (mu == 0) return;
            w[size_t(G.element_index(*u))] += mu;
        });
        for (size_t ci = 0; ci < nchars; ++ci) {
            std::complex<double> sum{0.0, 0.0};
            for (size_t ei = 0; ei < nelems; ++ei)
                if (w[ei]) sum += double(w[ei]) * G.eval_at(chars[ci], int(ei));
            out[ci][size_t(m)] = sum;
        }
    }
    return out;
}

namespace {

std::complex<double> poly_eval(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> r{0.0, 0.0};
    for (size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

// Durand-Kerner on a monic-normalized polynomial, constant-first coefficients.
std::vector<std::complex<double>> find_roots(std::vector<std::complex<double>> c) {
    const int d = int(c.size()) - 1;
    if (d <= 0) return {};
    for (auto& x : c) x /= c.back();
    double radius = 1.0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[size_t(i)]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        double a = 2.0 * std::numbers::pi * (double(i) + 0.25) / double(d);
        z[size_t(i)] = radius * std::complex<double>(std::cos(a), std::sin(a));
    }
    const int max_iter = 2000;
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> den{1.0, 0.0};
            for (int j = 0; j < d; ++j)
                if (j != i) den *= z[size_t(i)] - z[size_t(j)];
            std::complex<double> step = poly_eval(c, z[size_t(i)]) / den;
            z[size_t(i)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
        if (it == max_iter - 1 && worst > 1e-8)
            throw std::runtime_error("root finding failed to converge");
    }
    return z;
}

} // namespace

InverseRootReport weil_check(const LPolynomial& L, int q, double tol) {
    // inverse roots of L(u) are the roots of the reversed polynomial
    int d = int(L.coeffs.size()) - 1;
    while (d > 0 && std::abs(L.coeffs[size_t(d)]) < 1e-6) --d;
    InverseRootReport rep;
    if (d == 0) return rep;
    std::vector<std::complex<double>> rev(size_t(d + 1));
    for (int m = 0; m <= d; ++m) rev[size_t(d - m)] = L.coeffs[size_t(m)];
    auto roots = find_roots(rev);
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    const double sq = std::sqrt(double(q));
    for (auto alpha : roots) {
        RootInfo ri;
        ri.alpha = alpha;
        ri.dist_unit = std::abs(std::abs(alpha) - 1.0);
        ri.dist_sqrtq = std::abs(std::abs(alpha) - sq);
        ri.cls = ri.dist_unit <= tol    ? RootInfo::kUnitCircle
                 : ri.dist_sqrtq <= tol ? RootInfo::kSqrtQCircle
                                        : RootInfo::kAnomalous;
        if (ri.cls == RootInfo::kAnomalous) ++rep.anomalous;
        rep.roots.push_back(ri);
    }
    // functional consistency: prod (1 - alpha_i u) must reproduce the coefficients
    std::vector<std::complex<double>> prod{1.0};
    for (auto alpha : roots) {
        std::vector<std::complex<double>> nxt(prod.size() + 1, {0.0, 0.0});
        for (size_t i = 0; i < prod.size(); ++i) {
            nxt[i] += prod[i];
            nxt[i + 1] -= alpha * prod[i];
        }
        prod = std::move(nxt);
    }
    double scale = 0.0;
    for (const auto& cc : L.coeffs) scale = std::max(scale, std::abs(cc));
    double err = 0.0;
    for (size_t i = 0; i < prod.size(); ++i)
        err = std::max(err, std::abs(prod[i] - L.coeffs[i]) / std::max(scale, 1.0));
    rep.reconstruction_error = err;
    return rep;
}

double binom_exact(long long a, long long b) {
    if (a == -1 && b == -1) return 1.0; // empty-product convention
    if (b < 0 || a < 0 || b > a) return 0.0;
    b = std::min(b, a - b);
    double r = 1.0;
    for (long long i = 1; i <= b; ++i) r = r * double(a - b + i) / double(i);
    return std::round(r);
}

double lemma1_bound(int q, int n, int s, int deg_g, int r, bool trivial) {
    if (n < 0) throw std::domain_error("lemma1_bound needs n >= 0");
    if (trivial) {
        if (r == 0) return double(q + 1) * (n == 0 ? 1.0 : 0.0);
        return binom_exact(n + r - 1, r - 1) * double(q + 1);
    }
    if (s + deg_g < 2)
        throw std::domain_error("nontrivial lemma1_bound needs s + deg g >= 2");
    return binom_exact(n + s + deg_g - 2, s + deg_g - 2) * std::pow(double(q), double(n) / 2.0);
}

} // namespace ffmobius
