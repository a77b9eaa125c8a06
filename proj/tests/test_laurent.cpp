#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ffmobius/errors.hpp"
#include "ffmobius/laurent.hpp"

using namespace ffmobius;

namespace {

Poly P(const Field& f, const char* tok) { return Poly::parse(tok, f); }

Laurent random_series(const Field& F, std::mt19937_64& rng, int top, int prec) {
    std::vector<fq_t> c(size_t(top + prec + 1), 0);
    for (auto& x : c) x = fq_t(rng() % std::uint64_t(F.q()));
    return Laurent::from_window(top, std::move(c), prec, false);
}

// exhaustive pair-search oracle: every coprime pair (a, g) with
// deg a < deg g <= n/2 tested against the exact inequality
std::vector<RationalFF> all_admissible_pairs(const PolyRing& R, const Laurent& theta, int n) {
    std::vector<RationalFF> found;
    const int q = R.q();
    for (int e = 0; e <= n / 2; ++e) {
        for (const Poly& g : R.monic_polys(e)) {
            long long acount = 1;
            for (int i = 0; i < e; ++i) acount *= q;
            for (long long ai = 0; ai < acount; ++ai) {
                std::vector<fq_t> ac(size_t(std::max(e, 1)), 0);
                long long t = ai;
                for (int i = 0; i < e; ++i) { ac[size_t(i)] = fq_t(t % q); t /= q; }
                Poly a = Poly::from_coeffs(std::move(ac));
                if (!(g.is_one() || R.coprime(a, g))) continue;
                auto ex = diff_norm_exponent(R, theta, a, g);
                if (!ex || 2 * *ex < -(n + 2 * e)) found.push_back({a, g});
            }
        }
    }
    return found;
}

} // namespace

TEST_CASE("norm") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);
    CHECK(norm(f2, Laurent::zero(3)) == 0.0);
    CHECK(norm(f2, Laurent::from_poly(P(f2, "1,0,0,1"), 2)) == 8.0); // |t^3+1| = q^3
    Laurent tm2 = expand_rational(R, make_rational(R, Poly::one(), Poly::t_pow(2)), 4);
    CHECK(norm(f2, tm2) == 0.25); // |t^{-2}| = q^{-2}

    // all-zero window without exactness cannot certify zero
    Laurent unknown = Laurent::from_window(-1, {0, 0, 0}, 3, false);
    CHECK_THROWS_AS(norm(f2, unknown), PrecisionError);
    CHECK(norm_exponent(Laurent::zero(2)) == std::nullopt);
}

TEST_CASE("eq_map") {
    Field f2 = Field::from_order(2);
    CHECK(std::abs(eq_map(f2, Laurent::zero(2)) - std::complex<double>(1, 0)) < 1e-15);
    Laurent tm1 = Laurent::from_window(-1, {1}, 1, true);
    CHECK(std::abs(eq_map(f2, tm1) - std::complex<double>(-1, 0)) < 1e-15);
    // polynomials have no t^{-1} coefficient
    CHECK(std::abs(eq_map(f2, Laurent::from_poly(P(f2, "1,1,1"), 1)) - std::complex<double>(1, 0)) < 1e-15);
}

TEST_CASE("expand_rational") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);
    CHECK(expand_rational(R, make_rational(R, Poly(), Poly::one()), 3).window_zero());

    Laurent inv_t = expand_rational(R, make_rational(R, Poly::one(), Poly::t_pow(1)), 3);
    CHECK(inv_t.coeff(-1) == 1);
    CHECK(inv_t.coeff(-2) == 0);
    CHECK(inv_t.exact());

    // 1/(t+1) over F_2: geometric tail of ones
    Laurent geo = expand_rational(R, make_rational(R, Poly::one(), P(f2, "1,1")), 6);
    for (int i = 1; i <= 6; ++i) CHECK(geo.coeff(-i) == 1);
    CHECK_FALSE(geo.exact());

    // multiplying back by g recovers a on the known window
    std::mt19937_64 rng(7);
    for (int q : {2, 3}) {
        Field f = Field::from_order(q);
        PolyRing Rq(f);
        for (int trial = 0; trial < 50; ++trial) {
            int e = 1 + int(rng() % 4);
            Poly g = Rq.monic_polys(e)[size_t(rng() % std::uint64_t(Rq.monic_count(e)))];
            std::vector<fq_t> ac(size_t(e), 0);
            for (auto& x : ac) x = fq_t(rng() % std::uint64_t(q));
            Poly a = Poly::from_coeffs(std::move(ac));
            if (a.is_zero() || a.degree() >= g.degree() || !Rq.coprime(a, g)) continue;
            RationalFF r = make_rational(Rq, a, g);
            Laurent L = expand_rational(Rq, r, 8);
            Laurent back = poly_mul(f, r.den, L);
            for (int i = back.top(); i >= -back.prec(); --i)
                CHECK(back.coeff(i) == r.num.coeff(i));
        }
    }
}

TEST_CASE("poly_mul") {
    Field f2 = Field::from_order(2);
    Laurent theta = Laurent::from_window(-1, {0, 1}, 2, false); // t^{-2}
    Laurent same = poly_mul(f2, Poly::one(), theta);
    CHECK(same.coeff(-1) == 0);
    CHECK(same.coeff(-2) == 1);
    CHECK(same.prec() == 2);

    Laurent shifted = poly_mul(f2, Poly::t_pow(1), theta); // t * t^{-2} = t^{-1}
    CHECK(shifted.coeff(-1) == 1);
    CHECK(shifted.prec() == 1);

    // f = t^2 + t, theta = t^{-2} + t^{-3}: contributions to t^{-1} cancel
    Laurent th = Laurent::from_window(-1, {0, 1, 1}, 3, false);
    Laurent prod = poly_mul(f2, P(f2, "0,1,1"), th);
    CHECK(prod.coeff(-1) == 0);

    CHECK_THROWS_AS(poly_mul(f2, P(f2, "0,1,1"), Laurent::from_window(-1, {1, 1}, 2, false)),
                    PrecisionError);
}

TEST_CASE("ultrametric and multiplicativity on random inputs") {
    std::mt19937_64 rng(99);
    for (int q : {2, 3, 4}) {
        Field F = Field::from_order(q);
        for (int trial = 0; trial < 200; ++trial) {
            Laurent x = random_series(F, rng, int(rng() % 4) - 2, 8);
            Laurent y = random_series(F, rng, int(rng() % 4) - 2, 8);
            if (x.normalized().window_zero() || y.normalized().window_zero()) continue;
            double nx = norm(F, x), ny = norm(F, y);
            Laurent s = add(F, x, y);
            if (!s.normalized().window_zero()) {
                double ns = norm(F, s);
                CHECK(ns <= std::max(nx, ny) * (1 + 1e-12));
                if (nx != ny) CHECK(ns == doctest::Approx(std::max(nx, ny)));
            }
            CHECK(norm(F, mul(F, x, y)) == doctest::Approx(nx * ny));
        }
    }
}

TEST_CASE("continued fraction basics") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);

    auto conv = continued_fraction(R, Laurent::zero(5), 2);
    REQUIRE(conv.size() == 1);
    CHECK(conv[0].num.is_zero());
    CHECK(conv[0].den.is_one());
    CHECK(conv[0].exact);

    Laurent tm1 = Laurent::from_window(-1, {1, 0, 0, 0, 0}, 5, true);
    conv = continued_fraction(R, tm1, 2);
    REQUIRE(conv.size() == 2);
    CHECK(conv[1].num.is_one());
    CHECK(conv[1].den == P(f2, "0,1"));
    CHECK(conv[1].exact);

    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(continued_fraction(R, random_series(f2, rng, -1, 5), 4), PrecisionError);
}

TEST_CASE("continued fraction convergent properties on random series") {
    std::mt19937_64 rng(2024);
    Field f2 = Field::from_order(2);
    PolyRing R(f2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<fq_t> c(9, 0);
        for (auto& x : c) x = fq_t(rng() % 2);
        Laurent theta = Laurent::from_window(-1, std::move(c), 9, true);
        auto conv = continued_fraction(R, theta, 4);
        REQUIRE(!conv.empty());
        for (size_t k = 0; k < conv.size(); ++k) {
            CHECK(conv[k].den.is_monic());
            if (k > 0) CHECK(conv[k].den.degree() > conv[k - 1].den.degree());
            if (!conv[k].num.is_zero()) CHECK(R.coprime(conv[k].num, conv[k].den));
            auto e = diff_norm_exponent(R, theta, conv[k].num, conv[k].den);
            if (conv[k].exact) {
                CHECK(!e);
            } else if (k + 1 < conv.size()) {
                // |theta - a_k/g_k| = q^{-(deg g_k + deg g_{k+1})}
                REQUIRE(e.has_value());
                CHECK(*e == -(conv[k].den.degree() + conv[k + 1].den.degree()));
            }
        }
    }
}

TEST_CASE("approx examples") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);

    RationalFF r = approx(R, Laurent::zero(5), 4);
    CHECK(r.num.is_zero());
    CHECK(r.den.is_one());

    Laurent tm1 = Laurent::from_window(-1, {1, 0, 0, 0, 0}, 5, true);
    r = approx(R, tm1, 4);
    CHECK(r.num.is_one());
    CHECK(r.den == P(f2, "0,1"));

    CHECK_THROWS_AS(approx(R, Laurent::from_window(-1, {1, 1}, 2, false), 4), PrecisionError);
}

TEST_CASE("approx agrees with the exhaustive pair-search oracle") {
    // q = 2, n = 6: every truncated theta; the oracle enumerates all pairs
    Field f2 = Field::from_order(2);
    PolyRing R(f2);
    const int n = 6;
    for (long long ti = 0; ti < (1 << (n + 1)); ++ti) {
        std::vector<fq_t> c(size_t(n + 1), 0);
        long long t = ti;
        for (int i = 0; i <= n; ++i) { c[size_t(i)] = fq_t(t % 2); t /= 2; }
        Laurent theta = Laurent::from_window(-1, std::move(c), n + 1, true);
        auto pairs = all_admissible_pairs(R, theta, n);
        REQUIRE(pairs.size() == 1);
        RationalFF got = approx(R, theta, n);
        CHECK(got.num == pairs[0].num);
        CHECK(got.den == pairs[0].den);
    }
}

TEST_CASE("eq_map of f*theta depends only on the first deg f + 1 coefficients") {
    std::mt19937_64 rng(5);
    for (int q : {2, 3}) {
        Field F = Field::from_order(q);
        PolyRing R(F);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 2 + int(rng() % 3);
            Poly f = R.monic_polys(n)[size_t(rng() % std::uint64_t(R.monic_count(n)))];
            std::vector<fq_t> c(size_t(n + 3), 0);
            for (auto& x : c) x = fq_t(rng() % std::uint64_t(q));
            Laurent theta = Laurent::from_window(-1, c, n + 3, false);
            auto base = eq_map(F, poly_mul(F, f, theta));
            // perturb coefficients deeper than t^{-(deg f + 1)}
            for (int i = n + 1; i < n + 3; ++i) c[size_t(i)] = fq_t((c[size_t(i)] + 1) % q);
            Laurent theta2 = Laurent::from_window(-1, c, n + 3, false);
            auto perturbed = eq_map(F, poly_mul(F, f, theta2));
            CHECK(std::abs(base - perturbed) < 1e-15);
        }
    }
}

TEST_CASE("torus point tokens") {
    Field f3 = Field::from_order(3);
    TorusPoint p = TorusPoint::parse(f3, "1,0,2", 5);
    CHECK(p.prec() == 5);
    CHECK(p.token() == "1,0,2,0,0");
    CHECK(p.series().coeff(-1) == 1);
    CHECK(p.series().coeff(-3) == 2);
    CHECK(p.series().coeff(-5) == 0);
    CHECK_THROWS_AS(TorusPoint::parse(f3, "3", 2), std::domain_error);
    CHECK_THROWS_AS(TorusPoint::parse(f3, "", 2), std::domain_error);
}
