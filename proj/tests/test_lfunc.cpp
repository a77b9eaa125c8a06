#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ffmobius/errors.hpp"
#include "ffmobius/lfunc.hpp"

using namespace ffmobius;

namespace {
Poly P(const Field& f, const char* tok) { return Poly::parse(tok, f); }

long long llpow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
} // namespace

TEST_CASE("trivial closed forms") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);

    // s = 0, g = 1: the zeta function 1/(1-qu), coefficients q^n
    UnitGroup g0(R, HayesModulus{0, Poly::one()});
    LFunction L0 = l_polynomial(R, CharRef{&g0, HayesCharacter{{}}, Poly::one()});
    REQUIRE(std::holds_alternative<TrivialLForm>(L0));
    for (int n = 0; n <= 6; ++n)
        CHECK(trivial_coefficient(R, std::get<TrivialLForm>(L0), n) == double(llpow(2, n)));

    // chi_0 with g = t, q = 2: L = (1-u)/(1-2u), coefficients 1, 1, 2, 4, ...
    UnitGroup g1(R, HayesModulus{0, P(f2, "0,1")});
    HayesCharacter chi0;
    chi0.exponents.assign(g1.generators().size(), 0);
    LFunction L1 = l_polynomial(R, CharRef{&g1, chi0, Poly::one()});
    REQUIRE(std::holds_alternative<TrivialLForm>(L1));
    const auto& T = std::get<TrivialLForm>(L1);
    CHECK(T.omega_degrees == std::vector<int>{1});
    CHECK(trivial_coefficient(R, T, 0) == 1.0);
    for (int n = 1; n <= 6; ++n)
        CHECK(trivial_coefficient(R, T, n) == double(llpow(2, n - 1)));

    // coefficients count monic polynomials coprime to g (enumeration route)
    for (int q : {2, 3}) {
        Field F = Field::from_order(q);
        PolyRing Rq(F);
        for (const char* gt : {"0,1", "1,1,1", "0,0,1"}) {
            Poly g = P(F, gt);
            UnitGroup G(Rq, HayesModulus{0, g});
            HayesCharacter c0;
            c0.exponents.assign(G.generators().size(), 0);
            LFunction L = l_polynomial(Rq, CharRef{&G, c0, Poly::one()});
            for (int n = 0; n <= 5; ++n) {
                long long count = 0;
                Rq.for_each_monic(n, [&](const Poly& f) {
                    if (g.is_one() || Rq.coprime(f, g)) ++count;
                });
                CHECK(trivial_coefficient(Rq, std::get<TrivialLForm>(L), n) == double(count));
            }
        }
    }
}

TEST_CASE("nontrivial L-polynomial at q=2, s=0, g=t^2+t+1") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);
    UnitGroup G(R, HayesModulus{0, P(f2, "1,1,1")});
    CHECK(G.order() == 3);
    auto chars = G.characters();
    for (const auto& chi : chars) {
        if (chi.trivial()) continue;
        LFunction L = l_polynomial(R, CharRef{&G, chi, Poly::one()});
        REQUIRE(std::holds_alternative<LPolynomial>(L));
        const auto& Lp = std::get<LPolynomial>(L);
        // frozen: L = 1 - u (c_1 = omega + omega^2 = -1); degree bound vanish
        REQUIRE(Lp.coeffs.size() == 2);
        CHECK(std::abs(Lp.coeffs[0] - std::complex<double>(1, 0)) < 1e-12);
        CHECK(std::abs(Lp.coeffs[1] - std::complex<double>(-1, 0)) < 1e-12);
        CHECK(std::abs(Lp.beyond1) < 1e-9);
        CHECK(std::abs(Lp.beyond2) < 1e-9);

        auto rep = weil_check(Lp, 2);
        REQUIRE(rep.roots.size() == 1);
        CHECK(rep.roots[0].cls == RootInfo::kUnitCircle);
        CHECK(std::abs(rep.roots[0].alpha - std::complex<double>(1, 0)) < 1e-9);
        CHECK(rep.anomalous == 0);
    }
}

TEST_CASE("batched and single-character L computations agree") {
    for (int q : {2, 3}) {
        Field F = Field::from_order(q);
        PolyRing R(F);
        for (const char* gt : {"0,1", "1,1"}) {
            UnitGroup G(R, HayesModulus{1, P(F, gt)});
            auto batch = l_functions_batch(R, G, Poly::one());
            auto chars = G.characters();
            REQUIRE(batch.size() == chars.size());
            for (size_t ci = 0; ci < chars.size(); ++ci) {
                LFunction single = l_polynomial(R, CharRef{&G, chars[ci], Poly::one()});
                if (chars[ci].trivial()) {
                    CHECK(std::holds_alternative<TrivialLForm>(batch[ci]));
                    continue;
                }
                const auto& a = std::get<LPolynomial>(single);
                const auto& b = std::get<LPolynomial>(batch[ci]);
                REQUIRE(a.coeffs.size() == b.coeffs.size());
                for (size_t i = 0; i < a.coeffs.size(); ++i)
                    CHECK(std::abs(a.coeffs[i] - b.coeffs[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("weil_check across the desk grid") {
    // every nontrivial character for q=2, s <= 2, deg g <= 3 (and a q=3
    // slice): no anomalous roots, root product reproduces the coefficients
    for (int q : {2, 3}) {
        Field F = Field::from_order(q);
        PolyRing R(F);
        int dg_max = q == 2 ? 3 : 2;
        int s_max = q == 2 ? 2 : 1;
        for (int dg = 0; dg <= dg_max; ++dg) {
            R.for_each_monic(dg, [&](const Poly& g) {
                for (int s = 0; s <= s_max; ++s) {
                    UnitGroup G(R, HayesModulus{s, g});
                    auto batch = l_functions_batch(R, G, Poly::one());
                    auto chars = G.characters();
                    for (size_t ci = 0; ci < chars.size(); ++ci) {
                        if (chars[ci].trivial()) continue;
                        const auto& Lp = std::get<LPolynomial>(batch[ci]);
                        auto rep = weil_check(Lp, q);
                        CHECK(rep.anomalous == 0);
                        CHECK(rep.reconstruction_error < 1e-6);
                        for (const auto& ri : rep.roots)
                            CHECK((ri.dist_unit < 1e-6 || ri.dist_sqrtq < 1e-6));
                    }
                }
            });
        }
    }
}

TEST_CASE("weil_check on a constant polynomial") {
    LPolynomial L;
    L.coeffs = {std::complex<double>(1, 0)};
    L.s = 1;
    L.deg_g = 0;
    auto rep = weil_check(L, 2);
    CHECK(rep.roots.empty());
    CHECK(rep.anomalous == 0);
}

TEST_CASE("root finder against a known factorization") {
    // (1 - 2u)(1 - (1+i)u)(1 - (1-i)u): inverse roots 2, 1+i, 1-i
    std::complex<double> i(0, 1);
    std::vector<std::complex<double>> alphas{2.0, 1.0 + i, 1.0 - i};
    LPolynomial L;
    L.coeffs = {1.0};
    for (auto a : alphas) {
        std::vector<std::complex<double>> nxt(L.coeffs.size() + 1, 0.0);
        for (size_t k = 0; k < L.coeffs.size(); ++k) {
            nxt[k] += L.coeffs[k];
            nxt[k + 1] -= a * L.coeffs[k];
        }
        L.coeffs = nxt;
    }
    L.s = 2;
    L.deg_g = 2;
    auto rep = weil_check(L, 2);
    REQUIRE(rep.roots.size() == 3);
    CHECK(rep.reconstruction_error < 1e-9);
    int on_sqrt2 = 0, off_both = 0;
    bool found_two = false;
    for (const auto& ri : rep.roots) {
        if (ri.dist_sqrtq < 1e-9) ++on_sqrt2;
        if (ri.cls == RootInfo::kAnomalous) ++off_both;
        if (std::abs(ri.alpha - std::complex<double>(2, 0)) < 1e-9) found_two = true;
    }
    CHECK(on_sqrt2 == 2);   // 1 + i and 1 - i
    CHECK(off_both == 1);   // the synthetic root at 2 sits on neither circle
    CHECK(found_two);
    CHECK(rep.anomalous == 1);
}

TEST_CASE("mobius_char_sum") {
    Field f2 = Field::from_order(2);
    PolyRing R(f2);

    // chi_0 with g = 1: reciprocal of zeta is 1 - qu
    UnitGroup g0(R, HayesModulus{0, Poly::one()});
    LFunction L0 = l_polynomial(R, CharRef{&g0, HayesCharacter{{}}, Poly::one()});
    CHECK(std::abs(mobius_char_sum(R, L0, 0) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(mobius_char_sum(R, L0, 1) - std::complex<double>(-2, 0)) < 1e-12);
    for (int n = 2; n <= 8; ++n) CHECK(std::abs(mobius_char_sum(R, L0, n)) < 1e-12);

    // q=2, s=1, g=t: inversion equals direct enumeration for each character
    UnitGroup G(R, HayesModulus{1, P(f2, "0,1")});
    auto chars = G.characters();
    CHECK(chars.size() == 2);
    for (const auto& chi : chars) {
        CharRef ref{&G, chi, Poly::one()};
        LFunction L = l_polynomial(R, ref);
        for (int n = 0; n <= 6; ++n) {
            auto via_inverse = mobius_char_sum(R, L, n);
            auto via_direct = mobius_char_sum_direct(R, ref, n);
            CHECK(std::abs(via_inverse - via_direct) < 1e-9);
        }
    }
}

TEST_CASE("mobius sums batch equals the single-character route") {
    Field f3 = Field::from_order(3);
    PolyRing R(f3);
    UnitGroup G(R, HayesModulus{1, P(f3, "1,1")});
    auto batch = mobius_sums_batch(R, G, Poly::one(), 5);
    auto chars = G.characters();
    for (size_t ci = 0; ci < chars.size(); ++ci)
        for (int n = 0; n <= 5; ++n) {
            auto direct = mobius_char_sum_direct(R, CharRef{&G, chars[ci], Poly::one()}, n);
            CHECK(std::abs(batch[ci][size_t(n)] - direct) < 1e-12);
        }
}

TEST_CASE("product with the chi_d lift") {
    // eval(f) = chi(f) [gcd(f, d) = 1]; check mu(fd) = mu(f) mu(d) chi_d(f)
    for (int q : {2, 3}) {
        Field F = Field::from_order(q);
        PolyRing R(F);
        for (const char* dt : {"0,1", "1,1"}) {
            Poly d = P(F, dt);
            for (int n = 0; n <= 5; ++n) {
                R.for_each_monic(n, [&](const Poly& f) {
                    int lhs = R.mobius(R.mul(f, d));
                    int chi_d = R.coprime(f, d) ? 1 : 0;
                    int rhs = R.mobius(f) * R.mobius(d) * chi_d;
                    CHECK(lhs == rhs);
                });
            }
        }
    }
}

TEST_CASE("lemma1_bound values") {
    // nontrivial, n=4, s=1, deg_g=2: C(5,1) q^2 = 5 q^2
    CHECK(lemma1_bound(2, 4, 1, 2, 2, false) == doctest::Approx(5.0 * 4.0));
    CHECK(lemma1_bound(3, 4, 1, 2, 2, false) == doctest::Approx(5.0 * 9.0));
    // trivial, n=3, r=1: C(3,0)(q+1) = q+1
    CHECK(lemma1_bound(2, 3, 0, 1, 1, true) == doctest::Approx(3.0));
    CHECK(lemma1_bound(3, 3, 0, 1, 1, true) == doctest::Approx(4.0));
    // degenerate r=0: nonzero only at n=0
    CHECK(lemma1_bound(2, 0, 1, 0, 0, true) == doctest::Approx(3.0));
    CHECK(lemma1_bound(2, 4, 1, 0, 0, true) == 0.0);
    CHECK_THROWS_AS(lemma1_bound(2, 3, 0, 1, 0, false), std::domain_error);
}

TEST_CASE("degree bound vanish across the grid") {
    for (int q : {2, 3}) {
        Field F = Field::from_order(q);
        PolyRing R(F);
        for (int dg = 0; dg <= 2; ++dg) {
            R.for_each_monic(dg, [&](const Poly& g) {
                for (int s = 0; s <= 2; ++s) {
                    UnitGroup G(R, HayesModulus{s, g});
                    auto batch = l_functions_batch(R, G, Poly::one());
                    auto chars = G.characters();
                    for (size_t ci = 0; ci < chars.size(); ++ci) {
                        if (chars[ci].trivial()) continue;
                        const auto& Lp = std::get<LPolynomial>(batch[ci]);
                        CHECK(std::abs(Lp.beyond1) < 1e-9);
                        CHECK(std::abs(Lp.beyond2) < 1e-9);
                    }
                }
            });
        }
    }
}

TEST_CASE("resource guard") {
    Field f16 = Field::from_order(16);
    PolyRing R(f16);
    CHECK_THROWS_AS(UnitGroup(R, HayesModulus{5, Poly::t_pow(1)}), ResourceError);
}
