#include <gtest/gtest.h>

#include "chainring/frobenius.hpp"
#include "chainring/lattice.hpp"
#include "support.hpp"

using namespace chainring;
using namespace testsupport;

namespace {

Ideal ideal_of(const ChainRing* R, std::initializer_list<const char*> gens) {
    std::vector<RPoly> g;
    for (auto* s : gens) g.push_back(parse_rpoly(R, s));
    return canonical_sequence(R, g);
}

}  // namespace

TEST(Frobenius, Artinian) {
    auto R = z8();
    EXPECT_FALSE(is_artinian_quotient(ideal_of(R.get(), {"2"})));
    EXPECT_TRUE(is_artinian_quotient(ideal_of(R.get(), {"x^2", "2*x-4"})));
    EXPECT_TRUE(is_artinian_quotient(ideal_of(R.get(), {"x"})));
    EXPECT_THROW(is_artinian_quotient(Ideal::unit(R.get())), MathError);
}

TEST(Frobenius, MasterExamples) {
    auto R = z8();
    EXPECT_FALSE(is_frobenius(ideal_of(R.get(), {"2"})).frobenius.has_value());
    EXPECT_TRUE(*is_frobenius(ideal_of(R.get(), {"x^2", "2*x-4"})).frobenius);
    EXPECT_TRUE(*is_frobenius(ideal_of(R.get(), {"x"})).frobenius);
    EXPECT_FALSE(*is_frobenius(ideal_of(R.get(), {"x^2", "2*x"})).frobenius);
}

TEST(Frobenius, AnnihilatorOfMaximalInField) {
    // I = <x, pi> is maximal: the annihilator of the maximal ideal of the field R[x]/I is everything
    auto R = z8();
    Ideal I = ideal_of(R.get(), {"x", "2"});
    Ideal J = annihilator_of_maximal(I, RPoly::x(R.get()));
    EXPECT_TRUE(J.is_unit());
    auto rep = is_frobenius(I);
    ASSERT_EQ(rep.maximal.size(), 1u);
    EXPECT_TRUE(rep.maximal[0].box_cover);
}

TEST(Frobenius, ColonCaseOneN2) {
    // Z4, f_0 = x^2 (x+1) + 2, f_1 = x+1: p_1 = x with v_1 = 0, so [I:x] has inv (x(x+1), x+1)
    auto R = z4();
    Ideal I = ideal_of(R.get(), {"x^2*(x+1)+2", "2*(x+1)"});
    Ideal C = colon_elem(I, RPoly::x(R.get()));
    const Field* F = R->field_ptr();
    EXPECT_EQ(C.alpha(0), parse_fpoly(F, "x*(x+1)"));
    EXPECT_EQ(C.alpha(1), parse_fpoly(F, "x+1"));
}

TEST(Frobenius, LocalExamples) {
    auto R = z8();
    const Field* F = R->field_ptr();
    FPoly alpha(F);
    std::vector<int> e;
    ASSERT_TRUE(local_exponents(ideal_of(R.get(), {"x^2", "2*x-4"}), alpha, e));
    EXPECT_EQ(alpha, FPoly::x(F));
    EXPECT_TRUE(is_local_quotient(ideal_of(R.get(), {"x", "2"})));
    EXPECT_FALSE(is_local_quotient(ideal_of(R.get(), {"x*(x+1)"})));

    auto E = eis();
    // (alpha beta, alpha, alpha) with b = 0: two distinct irreducible factors
    Ideal I = ideal_of(E.get(), {"(x^2+x+1)*(x+1)", "pi*(x+1)", "pi^2*(x+1)"});
    EXPECT_FALSE(is_local_quotient(I));
    EXPECT_FALSE(is_frobenius_local(I).frobenius.has_value());
}

TEST(Frobenius, LocalVerdicts) {
    auto R = z8();
    auto yes = is_frobenius_local(ideal_of(R.get(), {"x^3", "2*x^2-4"}));
    EXPECT_TRUE(yes.local);
    EXPECT_TRUE(yes.frobenius_and_local());
    auto no = is_frobenius_local(ideal_of(R.get(), {"x^2", "2*x"}));
    EXPECT_TRUE(no.local);
    EXPECT_FALSE(no.frobenius_and_local());
    auto ex = is_frobenius_local(ideal_of(R.get(), {"x^2", "2*x-4"}));
    EXPECT_TRUE(ex.frobenius_and_local());
    EXPECT_EQ(ex.lambda, std::vector<int>{0});
    // all exponents equal: Lambda empty, Frobenius
    auto flat = is_frobenius_local(ideal_of(R.get(), {"x^2+2*x"}));
    EXPECT_TRUE(flat.lambda.empty());
    EXPECT_TRUE(flat.frobenius_and_local());
}

TEST(Frobenius, Family2bMinusA) {
    for (uint64_t p : {2u, 3u})
        for (int m = 2; m <= 5; ++m) {
            auto Z = zpm(p, m);
            const ChainRing* R = Z.get();
            for (int n = 2; n <= 3; ++n)
                for (int a = 1; a < m; ++a)
                    for (int b = a + 1; b <= m; ++b) {
                        if (2 * b - a < m) continue;
                        RPoly g1 = RPoly::monomial(R, 1, n);
                        RPoly g2 = RPoly::monomial(R, R->pi_pow(a), n - 1) - RPoly::pi_pow(R, b);
                        Ideal I = canonical_sequence(R, {g1, g2});
                        auto rep = is_frobenius_local(I);
                        ASSERT_TRUE(rep.local);
                        EXPECT_EQ(rep.frobenius_and_local(), 2 * b - a == m)
                            << "p=" << p << " m=" << m << " n=" << n << " a=" << a << " b=" << b;
                        EXPECT_EQ(*is_frobenius(I).frobenius, 2 * b - a == m);
                    }
        }
}

TEST(Frobenius, MasterAndLocalAgree) {
    Rng rng(21);
    std::vector<RingPtr> rings = {z8(), z9(), f2u(3), eis(), gr4_2()};
    for (auto& Rp : rings) {
        const ChainRing* R = Rp.get();
        for (int t = 0; t < 40; ++t) {
            Ideal I = canonical_sequence(R, rand_gens(R, rng, 2, 2, true, 2));
            if (I.is_unit()) continue;
            auto m = is_frobenius(I);
            auto l = is_frobenius_local(I);
            EXPECT_EQ(l.local, is_local_quotient(I));
            EXPECT_EQ(m.frobenius.value_or(false) && is_local_quotient(I), l.frobenius_and_local());
        }
    }
}

TEST(Frobenius, ClosedFormN2Examples) {
    auto R = z4();
    // w = 0: f_0 = x + 2
    EXPECT_TRUE(closed_form_frobenius_n2(ideal_of(R.get(), {"x+2"})));
    // u = 2, v = 1, w = 1 with q = 1 coprime to x: f_0 = x^2 + 2x, f_1 = x
    Ideal I = ideal_of(R.get(), {"x^2+2*x", "2*x"});
    EXPECT_FALSE(closed_form_frobenius_n2(I));
    EXPECT_FALSE(*is_frobenius(I).frobenius);
    Ideal J = ideal_of(R.get(), {"x^2", "2*x"});
    EXPECT_EQ(closed_form_frobenius_n2(J), *is_frobenius(J).frobenius);
    // w = 0 with u = 2, v = 1: Z4[x]/<x^2+2> is a chain ring
    Ideal K = ideal_of(R.get(), {"x^2+2", "2*x"});
    EXPECT_TRUE(closed_form_frobenius_n2(K));
    EXPECT_TRUE(*is_frobenius(K).frobenius);
}

TEST(Frobenius, ClosedFormN2AgreesWithMaster) {
    Rng rng(7);
    std::vector<RingPtr> rings = {z4(), z9(), f2u(2), f4u(2)};
    for (auto& Rp : rings) {
        const ChainRing* R = Rp.get();
        int checked = 0;
        while (checked < 60) {
            Ideal I = canonical_sequence(R, rand_gens(R, rng, 2, 3, true, 3));
            if (I.is_unit() || !is_artinian_quotient(I)) continue;
            EXPECT_EQ(closed_form_frobenius_n2(I), *is_frobenius(I).frobenius) << R->name();
            ++checked;
        }
    }
}

TEST(Frobenius, ClosedFormLocalExamples) {
    auto R = z8();
    const Field* F = R->field_ptr();
    FPoly x = FPoly::x(F);
    RPoly X = RPoly::x(R.get());
    // N = 3, e = (2, 2, 1), b_11 = 0: not Frobenius
    std::vector<RPoly> f(4, RPoly::constant(R.get(), 1));
    f[2] = X;
    f[1] = f[2];
    f[0] = X * f[1];
    Ideal I = canonical_sequence(R.get(), {f[0], f[1].mul_pi(1), f[2].mul_pi(2)});
    EXPECT_FALSE(closed_form_frobenius_local_small_n(I));
    EXPECT_FALSE(is_frobenius_local(I).frobenius_and_local());

    // N = 4, e = (4, 3, 2, 1), all b_{j1} = 1
    auto R4 = zpm(2, 4);
    const ChainRing* Q = R4.get();
    RPoly Y = RPoly::x(Q), one = RPoly::constant(Q, 1);
    std::vector<RPoly> g(5, one);
    for (int j = 3; j >= 0; --j) g[j] = Y * g[j + 1] + (j + 2 <= 4 ? g[j + 2].mul_pi(1) : RPoly(Q));
    std::vector<RPoly> gens;
    for (int j = 0; j < 4; ++j) gens.push_back(g[j].mul_pi(j));
    Ideal K = canonical_sequence(Q, gens);
    ASSERT_TRUE(is_local_quotient(K));
    EXPECT_TRUE(closed_form_frobenius_local_small_n(K));
    EXPECT_TRUE(is_frobenius_local(K).frobenius_and_local());

    EXPECT_THROW(closed_form_frobenius_local_small_n(ideal_of(R.get(), {"x*(x+1)"})), MathError);
    (void)x;
}

TEST(Frobenius, ClosedFormLocalAgreesWithMaster) {
    Rng rng(13);
    std::vector<RingPtr> rings = {zpm(2, 2), zpm(2, 3), zpm(2, 4), zpm(3, 2), zpm(3, 3), f2u(2), f2u(3), f2u(4)};
    for (auto& Rp : rings) {
        const ChainRing* R = Rp.get();
        const Field* F = R->field_ptr();
        for (int t = 0; t < 25; ++t) {
            FPoly a = t % 2 ? FPoly::x(F) : FPoly::x(F) + FPoly::constant(F, 1);
            auto e = rand_exponents(R->N(), rng, 3);
            Ideal I = local_form_ideal(R, local_form(R, a, e, rng, 1));
            ASSERT_TRUE(is_local_quotient(I));
            EXPECT_EQ(closed_form_frobenius_local_small_n(I), is_frobenius_local(I).frobenius_and_local())
                << R->name() << " " << invseq_to_string(I.invariant());
        }
    }
}

TEST(Frobenius, BParamsReconstructIdeal) {
    Rng rng(17);
    auto Rp = zpm(2, 4);
    const ChainRing* R = Rp.get();
    const Field* F = R->field_ptr();
    FPoly a = FPoly::x(F) + FPoly::constant(F, 1);
    for (int t = 0; t < 30; ++t) {
        auto e = rand_exponents(4, rng, 3);
        Ideal I = local_form_ideal(R, local_form(R, a, e, rng, 1));
        FPoly alpha(F);
        std::vector<int> ex;
        ASSERT_TRUE(local_exponents(I, alpha, ex));
        auto b = extract_b_params(I, alpha, ex);
        RPoly r = lift_poly(R, alpha);
        auto f = [&](int j) { return j < 4 ? I.f(j) : RPoly::constant(R, 1); };
        for (int j = 0; j < 4; ++j) {
            int next = j + 1 < 4 ? ex[j + 1] : 0;
            RPoly rest = f(j) - r.pow(ex[j] - next) * f(j + 1);
            for (int k = 1; k <= 3 - j; ++k) rest = rest - (lift_poly(R, b[j][k]) * f(j + k + 1)).mul_pi(k);
            EXPECT_TRUE(rest.trunc(4 - j).is_zero()) << "level " << j;
        }
    }
}
