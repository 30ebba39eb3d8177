#include <gtest/gtest.h>

#include "support.hpp"

using namespace chainring;
using namespace testsupport;

TEST(RPoly, ArithmeticExamples) {
    auto Z4 = z4();
    const ChainRing* R = Z4.get();
    EXPECT_EQ(parse_rpoly(R, "x+1") * parse_rpoly(R, "x+1"), parse_rpoly(R, "x^2+2*x+1"));
    Rng rng(1);
    for (auto& Rp : {z8(), eis(), f2u(3)}) {
        const ChainRing* S = Rp.get();
        RPoly f = rand_rpoly(S, rng, 4);
        EXPECT_TRUE((f.mul_pi(1) * RPoly::pi_pow(S, S->N() - 1)).is_zero());
        EXPECT_EQ(f + RPoly(S), f);
    }
}

TEST(RPoly, BarAndLift) {
    auto Z8 = z8();
    const ChainRing* R = Z8.get();
    const Field* F = R->field_ptr();
    EXPECT_EQ(bar(parse_rpoly(R, "x^2 + 2*x - 4")), parse_fpoly(F, "x^2"));
    EXPECT_TRUE(bar(parse_rpoly(R, "x^3+x+1").mul_pi(1)).is_zero());
    EXPECT_EQ(lift_poly(R, parse_fpoly(F, "x+1")), parse_rpoly(R, "x+1"));
    Rng rng(2);
    for (auto& Rp : {z8(), z9(), gr4_2(), f4u(2), eis()}) {
        const ChainRing* S = Rp.get();
        for (int t = 0; t < 200; ++t) {
            RPoly f = rand_rpoly(S, rng, 5), g = rand_rpoly(S, rng, 5);
            EXPECT_EQ(bar(f * g), bar(f) * bar(g));
            EXPECT_EQ(bar(f + g), bar(f) + bar(g));
            FPoly h = bar(f);
            EXPECT_EQ(bar(lift_poly(S, h)), h);
        }
    }
}

TEST(RPoly, DivremUnitExamples) {
    auto Z8 = z8();
    const ChainRing* R = Z8.get();
    auto d1 = divrem_unit(parse_rpoly(R, "x^3"), parse_rpoly(R, "x-2"));
    EXPECT_EQ(d1.quot, parse_rpoly(R, "x^2+2*x+4"));
    EXPECT_TRUE(d1.rem.is_zero());
    auto d2 = divrem_unit(parse_rpoly(R, "2*x"), parse_rpoly(R, "x-2"));
    EXPECT_EQ(d2.quot, parse_rpoly(R, "2"));
    EXPECT_EQ(d2.rem, parse_rpoly(R, "4"));
    RPoly f = parse_rpoly(R, "3*x^4 + x + 5");
    auto d3 = divrem_unit(f, RPoly::constant(R, 1));
    EXPECT_EQ(d3.quot, f);
    EXPECT_TRUE(d3.rem.is_zero());
    EXPECT_THROW(divrem_unit(f, parse_rpoly(R, "2*x+1")), MathError);
}

TEST(RPoly, DivremUnitProperty) {
    Rng rng(3);
    for (auto& Rp : {z8(), z9(), gr4_2(), f2u(3), eis()}) {
        const ChainRing* R = Rp.get();
        for (int t = 0; t < 300; ++t) {
            RPoly f = rand_rpoly(R, rng, 7);
            RPoly d = rand_rpoly(R, rng, 3);
            if (d.is_zero() || !R->is_unit(d.lc())) continue;
            auto qr = divrem_unit(f, d);
            EXPECT_EQ(qr.quot * d + qr.rem, f);
            EXPECT_TRUE(qr.rem.is_zero() || qr.rem.deg() < d.deg());
        }
    }
}

TEST(RPoly, StripPi) {
    auto Z8 = z8();
    const ChainRing* R = Z8.get();
    EXPECT_EQ(strip_pi(parse_rpoly(R, "2*x+4"), 1), parse_rpoly(R, "x+2"));
    EXPECT_TRUE(strip_pi(RPoly(R), 2).is_zero());
    EXPECT_THROW(strip_pi(parse_rpoly(R, "2*x+1"), 1), MathError);
    auto E = eis();
    RPoly f = parse_rpoly(E.get(), "pi^2*(x+1)");
    RPoly g = strip_pi(f, 2);
    EXPECT_EQ(g, parse_rpoly(E.get(), "x+1"));
    EXPECT_EQ(g.mul_pi(2), f);
    Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        RPoly h = rand_rpoly(E.get(), rng, 4);
        int s = static_cast<int>(rng() % 3);
        EXPECT_EQ(strip_pi(h.mul_pi(s), s).mul_pi(s), h.mul_pi(s));
    }
}

TEST(RPoly, ParserAndDigitMatrix) {
    auto Z8 = z8();
    const ChainRing* R = Z8.get();
    RPoly f = parse_rpoly(R, "2*x - 4");
    auto m = f.digit_matrix();
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0], (std::vector<uint32_t>{0, 0, 1}));
    EXPECT_EQ(m[1], (std::vector<uint32_t>{0, 1, 0}));
    EXPECT_EQ(RPoly::from_digit_matrix(R, m), f);
    EXPECT_EQ(parse_rpoly(R, "2x(x+1)"), parse_rpoly(R, "2*x^2 + 2*x"));
    EXPECT_EQ(parse_rpoly(R, "pi^2"), parse_rpoly(R, "4"));
    EXPECT_THROW(parse_rpoly(R, "x +* 1"), std::invalid_argument);
    EXPECT_THROW(parse_rpoly(R, "w"), std::invalid_argument);
    auto G = gr4_2();
    RPoly g = parse_rpoly(G.get(), "z*x + z^2");
    EXPECT_EQ(g.coeff(0), G->neg(G->add(G->z(), 1)));  // z^2 = -z - 1
    Rng rng(5);
    for (auto& Rp : {z9(), gr4_2(), eis(), f4u(2)}) {
        for (int t = 0; t < 50; ++t) {
            RPoly h = rand_rpoly(Rp.get(), rng, 4);
            EXPECT_EQ(RPoly::from_digit_matrix(Rp.get(), h.digit_matrix()), h);
            EXPECT_EQ(parse_rpoly(Rp.get(), h.to_string()), h) << h.to_string();
        }
    }
}

TEST(RPoly, LayersAndValuation) {
    auto E = eis();
    const ChainRing* R = E.get();
    RPoly f = parse_rpoly(R, "x^2 + pi*x + pi^2");
    EXPECT_EQ(f.valuation(), 0);
    EXPECT_EQ(f.layer(0), parse_fpoly(R->field_ptr(), "x^2"));
    EXPECT_EQ(f.layer(1), parse_fpoly(R->field_ptr(), "x"));
    EXPECT_EQ(f.layer(2), parse_fpoly(R->field_ptr(), "1"));
    EXPECT_EQ(f.mul_pi(1).valuation(), 1);
    EXPECT_EQ(RPoly(R).valuation(), 3);
}
