#include "ffmobius/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffmobius/errors.hpp"

namespace ffmobius {

Laurent Laurent::zero(int prec, bool exact) {
    if (prec < 1) throw std::domain_error("Laurent precision must be >= 1");
    Laurent x;
    x.top_ = -prec - 1;
    x.prec_ = prec;
    x.exact_ = exact;
    return x;
}

Laurent Laurent::from_poly(const Poly& f, int prec) {
    if (prec < 1) throw std::domain_error("Laurent precision must be >= 1");
    if (f.is_zero()) return zero(prec, true);
    Laurent x;
    x.top_ = f.degree();
    x.prec_ = prec;
    x.exact_ = true;
    x.c_.assign(size_t(f.degree() + prec + 1), 0);
    for (int i = 0; i <= f.degree(); ++i) x.c_[size_t(f.degree() - i)] = f.coeff(i);
    return x;
}

Laurent Laurent::from_window(int top, std::vector<fq_t> coeffs, int prec, bool exact) {
    if (prec < 1) throw std::domain_error("Laurent precision must be >= 1");
    if (int(coeffs.size()) != top + prec + 1)
        throw std::domain_error("Laurent window size mismatch");
    Laurent x;
    x.top_ = top;
    x.prec_ = prec;
    x.exact_ = exact;
    x.c_ = std::move(coeffs);
    return x;
}

fq_t Laurent::coeff(int i) const {
    if (i > top_) return 0;
    if (i >= -prec_) return c_[size_t(top_ - i)];
    if (exact_) return 0;
    throw PrecisionError("Laurent coefficient below precision window");
}

bool Laurent::window_zero() const {
    for (fq_t c : c_)
        if (c != 0) return false;
    return true;
}

Laurent Laurent::normalized() const {
    Laurent x = *this;
    while (!x.c_.empty() && x.c_.front() == 0) {
        x.c_.erase(x.c_.begin());
        --x.top_;
    }
    return x;
}

Laurent add(const Field& F, const Laurent& x, const Laurent& y) {
    int prec = std::min(x.prec(), y.prec());
    bool exact = x.exact() && y.exact();
    if (exact) prec = std::max(x.prec(), y.prec());
    int top = std::max(x.top(), y.top());
    if (top < -prec) return Laurent::zero(prec, exact);
    std::vector<fq_t> c(size_t(top + prec + 1), 0);
    for (int i = top; i >= -prec; --i)
        c[size_t(top - i)] = F.add(x.coeff(i), y.coeff(i));
    return Laurent::from_window(top, std::move(c), prec, exact);
}

Laurent sub(const Field& F, const Laurent& x, const Laurent& y) {
    int prec = std::min(x.prec(), y.prec());
    bool exact = x.exact() && y.exact();
    if (exact) prec = std::max(x.prec(), y.prec());
    int top = std::max(x.top(), y.top());
    if (top < -prec) return Laurent::zero(prec, exact);
    std::vector<fq_t> c(size_t(top + prec + 1), 0);
    for (int i = top; i >= -prec; --i)
        c[size_t(top - i)] = F.sub(x.coeff(i), y.coeff(i));
    return Laurent::from_window(top, std::move(c), prec, exact);
}

Laurent mul(const Field& F, const Laurent& x, const Laurent& y) {
    const Laurent xn = x.normalized(), yn = y.normalized();
    if ((xn.window_zero() && xn.exact()) || (yn.window_zero() && yn.exact()))
        return Laurent::zero(std::max(x.prec(), y.prec()), true);
    int prec;
    bool exact = xn.exact() && yn.exact();
    if (exact) {
        prec = xn.prec() + yn.prec();
    } else {
        // coefficient k is known unless an unknown coefficient of one factor
        // can pair with a known one of the other to reach k
        constexpr int kInf = 1 << 24;
        int from_x = xn.exact() ? kInf : xn.prec() - yn.top();
        int from_y = yn.exact() ? kInf : yn.prec() - xn.top();
        prec = std::min(from_x, from_y);
        if (prec < 1) throw PrecisionError("insufficient precision for Laurent product");
        prec = std::min(prec, xn.prec() + yn.prec());
    }
    int top = xn.top() + yn.top();
    if (xn.window_zero() || yn.window_zero() || top < -prec)
        return Laurent::zero(prec, exact);
    std::vector<fq_t> c(size_t(top + prec + 1), 0);
    for (int i = xn.top(); i >= -xn.prec(); --i) {
        fq_t xi = xn.coeff(i);
        if (xi == 0) continue;
        for (int j = yn.top(); j >= -yn.prec(); --j) {
            int k = i + j;
            if (k < -prec) break;
            c[size_t(top - k)] = F.add(c[size_t(top - k)], F.mul(xi, yn.coeff(j)));
        }
    }
    return Laurent::from_window(top, std::move(c), prec, exact);
}

Laurent poly_mul(const Field& F, const Poly& f, const Laurent& x) {
    if (f.is_zero()) return Laurent::zero(x.prec(), true);
    if (!x.exact() && x.prec() - f.degree() < 1)
        throw PrecisionError("insufficient precision for polynomial-series product");
    return mul(F, Laurent::from_poly(f, 1), x);
}

double norm(const Field& F, const Laurent& x) {
    auto e = norm_exponent(x);
    if (!e) return 0.0;
    return std::pow(double(F.q()), double(*e));
}

std::optional<int> norm_exponent(const Laurent& x) {
    Laurent n = x.normalized();
    if (!n.window_zero()) return n.top();
    if (n.exact()) return std::nullopt;
    throw PrecisionError("window is zero but precision cannot certify a zero series");
}

std::complex<double> eq_map(const Field& F, const Laurent& x) {
    return F.psi(x.coeff(-1));
}

RationalFF make_rational(const PolyRing& R, Poly a, Poly g) {
    if (g.is_zero()) throw std::domain_error("rational with zero denominator");
    if (a.is_zero()) return {Poly(), Poly::one()};
    Poly d = R.gcd(a, g);
    if (!d.is_one()) {
        a = R.div_exact(a, d);
        g = R.div_exact(g, d);
    }
    fq_t lead = g.lead();
    if (lead != 1) {
        fq_t li = R.field().inv(lead);
        a = R.mul_scalar(a, li);
        g = R.mul_scalar(g, li);
    }
    if (a.degree() >= g.degree()) throw std::domain_error("rational is not a torus point (deg num >= deg den)");
    return {std::move(a), std::move(g)};
}

bool rational_eq(const PolyRing& R, const RationalFF& x, const RationalFF& y) {
    return R.mul(x.num, y.den) == R.mul(y.num, x.den);
}

Laurent expand_rational(const PolyRing& R, const RationalFF& r, int prec) {
    if (prec < 1) throw std::domain_error("Laurent precision must be >= 1");
    if (r.num.is_zero()) return Laurent::zero(prec, true);
    // a/g = Q/t^prec + rem/(g t^prec) with |rem/g| < 1, so the window
    // [-prec, deg a - deg g] is exactly the coefficients of Q.
    Poly shifted = R.mul(r.num, Poly::t_pow(prec));
    auto [quo, rem] = R.divmod(shifted, r.den);
    int top = r.num.degree() - r.den.degree();
    std::vector<fq_t> c(size_t(top + prec + 1), 0);
    for (int i = top; i >= -prec; --i) c[size_t(top - i)] = quo.coeff(prec + i);
    return Laurent::from_window(top, std::move(c), prec, rem.is_zero());
}

std::pair<Poly, int> window_fraction(const Laurent& x) {
    const int P = x.prec();
    std::vector<fq_t> h(size_t(std::max(x.top(), -P) + P + 1), 0);
    for (int i = -P; i <= x.top(); ++i) h[size_t(P + i)] = x.coeff(i);
    return {Poly::from_coeffs(std::move(h)), P};
}

std::optional<int> diff_norm_exponent(const PolyRing& R, const Laurent& theta,
                                      const Poly& a, const Poly& g) {
    auto [h, P] = window_fraction(theta);
    // theta - a/g = (h g - a t^P) / (g t^P)
    Poly num = R.sub(R.mul(h, g), R.mul(a, Poly::t_pow(P)));
    if (num.is_zero()) return std::nullopt;
    return num.degree() - P - g.degree();
}

std::vector<Convergent> continued_fraction(const PolyRing& R, const Laurent& theta, int max_deg) {
    if (max_deg < 0) throw std::domain_error("max_deg must be >= 0");
    if (!theta.exact() && theta.prec() < 2 * max_deg + 1)
        throw PrecisionError("continued fraction needs precision >= 2*max_deg + 1");
    auto [h, P] = window_fraction(theta);

    // Euclid on (h, t^P); partial quotients a_0, a_1, ... feed the recurrence
    // p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}.
    const Field& F = R.field();
    std::vector<Convergent> out;
    Poly ra = h, rb = Poly::t_pow(P);
    Poly p_prev2 = Poly(), p_prev1 = Poly::one();
    Poly q_prev2 = Poly::one(), q_prev1 = Poly();
    while (!rb.is_zero()) {
        auto [quot, rem] = R.divmod(ra, rb);
        Poly pk = R.add(R.mul(quot, p_prev1), p_prev2);
        Poly qk = R.add(R.mul(quot, q_prev1), q_prev2);
        p_prev2 = p_prev1; p_prev1 = pk;
        q_prev2 = q_prev1; q_prev1 = qk;
        ra = rb; rb = rem;
        if (qk.degree() > max_deg) break;
        fq_t lead = qk.lead();
        if (lead != 1) {
            fq_t li = F.inv(lead);
            pk = R.mul_scalar(pk, li);
            qk = R.mul_scalar(qk, li);
        }
        out.push_back({pk, qk, rem.is_zero()});
        if (rem.is_zero()) break;
    }
    return out;
}

RationalFF approx(const PolyRing& R, const Laurent& theta, int n) {
    if (n < 1) throw std::domain_error("approx requires n >= 1");
    if (theta.normalized().top() >= 0) throw std::domain_error("approx requires a torus point");
    if (!theta.exact() && theta.prec() < n + 1)
        throw PrecisionError("approx needs precision >= n + 1");
    const int half = n / 2;
    auto conv = continued_fraction(R, theta, half);
    if (conv.empty()) throw std::logic_error("continued fraction produced no convergents");
    const Convergent& best = conv.back();
    // the approximation inequality, asserted exactly: 2*exponent < -(n + 2 deg g)
    auto e = diff_norm_exponent(R, theta, best.num, best.den);
    if (e && !(2 * *e < -(n + 2 * best.den.degree())))
        throw std::logic_error("selected convergent violates the approximation inequality");
    return make_rational(R, best.num, best.den);
}

TorusPoint TorusPoint::from_coeffs(std::vector<fq_t> coeffs, bool exact) {
    if (coeffs.empty()) throw std::domain_error("torus point needs at least one coefficient");
    int prec = int(coeffs.size());
    return TorusPoint(Laurent::from_window(-1, std::move(coeffs), prec, exact));
}

TorusPoint TorusPoint::zero(int prec) {
    return TorusPoint(Laurent::zero(prec, true));
}

TorusPoint TorusPoint::parse(const Field& F, std::string_view token, int min_prec) {
    std::vector<fq_t> c;
    std::string rest(token);
    size_t pos = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty()) throw std::domain_error("bad torus token: " + rest);
        int v = std::stoi(piece);
        if (v < 0 || v >= F.q()) throw std::domain_error("torus coefficient out of range for field");
        c.push_back(fq_t(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    while (int(c.size()) < min_prec) c.push_back(0);
    return from_coeffs(std::move(c), true);
}

std::string TorusPoint::token() const {
    std::string s;
    for (int i = 1; i <= s_.prec(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(int(s_.coeff(-i)));
    }
    return s;
}

} // namespace ffmobius
