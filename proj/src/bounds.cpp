#include "ffmobius/bounds.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "ffmobius/errors.hpp"

namespace ffmobius {

namespace {
const double kLog3Sqrt3Half = std::log(3.0 * std::sqrt(3.0) / 2.0);

std::string fmt_params(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += " ";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}
} // namespace

double binom_log(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return -std::numeric_limits<double>::infinity();
    return std::lgamma(double(a + 1)) - std::lgamma(double(b + 1)) - std::lgamma(double(a - b + 1));
}

BoundCheck lemma4_divisor_sum(const PolyRing& R, const Poly& g) {
    if (g.is_zero() || !g.is_monic()) throw std::domain_error("lemma4 needs a monic polynomial");
    if (g.degree() < 1) throw std::domain_error("lemma4 needs deg g >= 1");
    if (!R.is_squarefree(g)) throw std::domain_error("lemma4 needs a squarefree polynomial");
    double lhs = 0.0;
    for (const Poly& d : R.divisors(g)) lhs += std::pow(double(R.q()), -double(d.degree()));
    double rhs = (1.0 + std::log(double(g.degree())) / std::log(double(R.q()))) * std::numbers::e;
    BoundCheck c;
    c.name = "lemma4_divisor_sum";
    c.params = "q=" + std::to_string(R.q()) + " g=" + g.token();
    c.lhs = lhs;
    c.rhs = rhs;
    c.pass = lhs <= rhs;
    return c;
}

BoundCheck pnt_identity(const PolyRing& R, int N) {
    if (N < 1) throw std::domain_error("pnt_identity needs N >= 1");
    if (double(N) * std::log2(double(R.q())) > std::log2(1e7))
        throw ResourceError("q^N exceeds the desk-scale cap");
    long long lhs = 0;
    for (int k = 1; k <= N; ++k)
        if (N % k == 0) lhs += (long long)k * R.count_irreducibles(k);
    long long rhs = 1;
    for (int i = 0; i < N; ++i) rhs *= R.q();
    BoundCheck c;
    c.name = "pnt_identity";
    c.params = fmt_params({{"q", R.q()}, {"N", N}});
    c.lhs = double(lhs);
    c.rhs = double(rhs);
    c.pass = (lhs == rhs);
    return c;
}

std::pair<BoundCheck, BoundCheck> robbins_bounds(int k) {
    if (k < 1) throw std::domain_error("robbins_bounds needs k >= 1");
    const double lk = double(k);
    const double base = 0.5 * std::log(2.0 * std::numbers::pi) + (lk + 0.5) * std::log(lk) - lk;
    const double lower = base + 1.0 / (12.0 * lk + 1.0);
    const double upper = base + 1.0 / (12.0 * lk);
    const double mid = std::lgamma(lk + 1.0);
    BoundCheck lo, hi;
    lo.name = "robbins_lower";
    lo.params = fmt_params({{"k", k}});
    lo.lhs = lower;
    lo.rhs = mid;
    lo.pass = lower < mid;
    hi.name = "robbins_upper";
    hi.params = lo.params;
    hi.lhs = mid;
    hi.rhs = upper;
    hi.pass = mid < upper;
    return {lo, hi};
}

std::vector<BoundCheck> binom_chain(int n, int s, int deg_g, int deg_d) {
    if (n < 3) throw std::domain_error("binomial chain needs n >= 3");
    if (s < 0 || deg_g < 0 || deg_d < 0 || deg_d > deg_g)
        throw std::domain_error("binomial chain: inconsistent parameters");
    if (s + deg_g != n - n / 2)
        throw std::domain_error("binomial chain needs s + deg g = n - [n/2]");
    const int k = n / 2;
    const double lk = double(k);
    std::vector<BoundCheck> out;
    std::string params = fmt_params({{"n", n}, {"s", s}, {"deg_g", deg_g}, {"deg_d", deg_d}});

    {
        BoundCheck c;
        c.name = "chain_binom_monotone";
        c.params = params;
        c.lhs = binom_log(n - deg_d + s + deg_g - 2, s + deg_g - 2);
        c.rhs = binom_log(2 * n - k - 2, n - k - 2);
        c.pass = c.lhs <= c.rhs + 1e-12;
        out.push_back(c);
    }
    {
        BoundCheck c;
        c.name = "chain_central_binom";
        c.params = params;
        c.lhs = binom_log(2 * n - k - 2, n - k - 2);
        c.rhs = binom_log(3 * k, k);
        c.pass = c.lhs < c.rhs;
        out.push_back(c);
    }
    const double middle = -0.5 * std::log(2.0 * std::numbers::pi) +
                          1.0 / (36.0 * lk) - 1.0 / (12.0 * lk + 1.0) - 1.0 / (24.0 * lk + 1.0) +
                          (3.0 * lk + 0.5) * std::log(3.0 * lk) -
                          (lk + 0.5) * std::log(lk) - (2.0 * lk + 0.5) * std::log(2.0 * lk);
    const double closed = -0.5 * std::log(4.0 * std::numbers::pi * lk / 3.0) + 2.0 * lk * kLog3Sqrt3Half;
    {
        BoundCheck c;
        c.name = "chain_robbins_step";
        c.params = params;
        c.lhs = binom_log(3 * k, k);
        c.rhs = middle;
        c.pass = c.lhs < c.rhs;
        out.push_back(c);
    }
    {
        BoundCheck c;
        c.name = "chain_closed_form_step";
        c.params = params;
        c.lhs = middle;
        c.rhs = closed;
        c.pass = c.lhs < c.rhs;
        out.push_back(c);
    }
    {
        BoundCheck c;
        c.name = "chain_standalone";
        c.params = params;
        c.lhs = binom_log(3 * k, k);
        c.rhs = closed;
        c.pass = c.lhs < c.rhs;
        out.push_back(c);
    }
    return out;
}

double theorem_bound(int q, int n) {
    return std::exp(theorem_bound_log(q, n));
}

double theorem_bound_log(int q, int n) {
    return std::log(4.0) + (3.0 * n + 1.0) / 4.0 * std::log(double(q)) + double(n) * kLog3Sqrt3Half;
}

double remark_bound(int q, int n, double eps) {
    return std::exp(remark_bound_log(q, n, eps));
}

double remark_bound_log(int q, int n, double eps) {
    return std::log(4.0) + (0.75 + eps) * double(n) * std::log(double(q));
}

BoundCheck remark_check(int q, int n, double eps) {
    BoundCheck c;
    c.name = "remark_dominates";
    c.params = fmt_params({{"q", q}, {"n", n}}) + " eps=" + std::to_string(eps);
    c.lhs = theorem_bound_log(q, n);
    c.rhs = remark_bound_log(q, n, eps);
    c.pass = c.lhs <= c.rhs + 1e-12;
    return c;
}

double remark_threshold(double eps) {
    if (eps <= 0.0) throw std::domain_error("remark threshold needs eps > 0");
    return std::exp(kLog3Sqrt3Half / eps);
}

BoundCheck final_inequality(int q, int n) {
    if (n < 3) throw std::domain_error("final inequality needs n >= 3");
    const double lq = std::log(double(q));
    double lhs = (double(n) - 0.5 * double(n / 2)) * lq +
                 std::log(1.0 + std::log(double(n)) / lq) + 1.0 -
                 0.5 * std::log(2.0 * std::numbers::pi * double(n - 1) / 3.0) +
                 double(n) * kLog3Sqrt3Half;
    BoundCheck c;
    c.name = "final_inequality";
    c.params = fmt_params({{"q", q}, {"n", n}});
    c.lhs = lhs;
    c.rhs = theorem_bound_log(q, n);
    c.pass = lhs <= c.rhs + 1e-12;
    return c;
}

BoundCheck lemma1_remark_check(int q, int n, int deg_g) {
    BoundCheck c;
    c.name = "lemma1_remark_as_printed";
    c.params = fmt_params({{"q", q}, {"n", n}, {"deg_g", deg_g}});
    double lhs = std::log(double(q + 1)) + binom_log(n + deg_g - 1, n);
    double rhs = binom_log(n + deg_g - 2, n) + double(n) / 2.0 * std::log(double(q));
    c.lhs = lhs;
    c.rhs = rhs;
    c.pass = lhs <= rhs;
    c.informational = true;
    return c;
}

} // namespace ffmobius
