#include <gtest/gtest.h>

#include <random>

#include "chainring/residue_field.hpp"
#include "chainring/rpoly.hpp"

using namespace chainring;

namespace {

FPoly P(const Field* F, const char* s) { return parse_fpoly(F, s); }

// Every monic polynomial of degree d over F.
std::vector<FPoly> monics(const Field* F, int d) {
    std::vector<FPoly> out;
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= F->q();
    for (uint64_t k = 0; k < total; ++k) {
        std::vector<Field::Elem> c(d + 1);
        uint64_t t = k;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<Field::Elem>(t % F->q());
            t /= F->q();
        }
        c[d] = 1;
        out.emplace_back(F, c);
    }
    return out;
}

bool trial_irreducible(const FPoly& a) {
    int d = a.ideg();
    if (d < 1) return false;
    for (int k = 1; 2 * k <= d; ++k)
        for (auto& m : monics(a.field(), k))
            if (divides(m, a)) return false;
    return true;
}

FPoly rand_poly(const Field* F, std::mt19937_64& rng, int maxdeg) {
    std::vector<Field::Elem> c(std::uniform_int_distribution<int>(0, maxdeg)(rng) + 1);
    for (auto& x : c) x = static_cast<Field::Elem>(rng() % F->q());
    return FPoly(F, c);
}

}  // namespace

TEST(Field, PrimeAndExtensionArithmetic) {
    auto F4 = Field::make(2, 2, {1, 1, 1});
    auto z = F4->generator();
    EXPECT_EQ(F4->mul(z, z), F4->add(z, 1));  // z^2 = z + 1
    for (Field::Elem a = 1; a < 4; ++a) EXPECT_EQ(F4->mul(a, F4->inv(a)), 1u);
    auto F5 = Field::prime(5);
    EXPECT_EQ(F5->mul(3, 2), 1u);
    EXPECT_EQ(F5->from_int(-1), 4u);
    EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
    EXPECT_THROW(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);  // z^2 + 1 reducible
}

TEST(FPoly, ZeroDegreeIsInfinite) {
    auto F = Field::prime(2);
    FPoly zero(F.get());
    EXPECT_TRUE(zero.deg().is_infinite());
    EXPECT_LT(FPoly::constant(F.get(), 1).deg(), zero.deg());
    EXPECT_EQ(zero + P(F.get(), "x+1"), P(F.get(), "x+1"));
}

TEST(FPoly, SpecExamples) {
    auto F = Field::prime(2);
    const Field* f = F.get();
    auto [s, t] = divrem(P(f, "x^2+x"), P(f, "x+1"));
    EXPECT_EQ(s, P(f, "x"));
    EXPECT_TRUE(t.is_zero());
    EXPECT_EQ(P(f, "x+1") * P(f, "x^2+x+1"), P(f, "x^3+1"));
    EXPECT_EQ(gcd(P(f, "(x+1)^2*(x^2+x+1)"), P(f, "x+1")), P(f, "x+1"));
    auto xg = xgcd(P(f, "x+1"), P(f, "x^2+x+1"));
    EXPECT_EQ(xg.g, P(f, "1"));
    EXPECT_EQ(xg.u, P(f, "x"));
    EXPECT_EQ(xg.v, P(f, "1"));
    EXPECT_EQ(gcd(FPoly(f), P(f, "x^2+x")), P(f, "x^2+x"));
    EXPECT_THROW(divrem(P(f, "x"), FPoly(f)), MathError);
}

TEST(FPoly, FactorExamples) {
    auto F = Field::prime(2);
    const Field* f = F.get();
    auto fs = factor(P(f, "(x+1)^2*(x^2+x+1)"));
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0].poly, P(f, "x+1"));
    EXPECT_EQ(fs[0].mult, 2);
    EXPECT_EQ(fs[1].poly, P(f, "x^2+x+1"));
    EXPECT_EQ(fs[1].mult, 1);
    auto g = factor(P(f, "x^4+x"));
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g[0].poly, P(f, "x"));
    EXPECT_EQ(g[1].poly, P(f, "x+1"));
    EXPECT_EQ(g[2].poly, P(f, "x^2+x+1"));
    EXPECT_TRUE(is_irreducible(P(f, "x^2+x+1")));
    EXPECT_FALSE(is_irreducible(P(f, "x^2+1")));
    EXPECT_FALSE(is_irreducible(P(f, "1")));
    EXPECT_THROW(factor(FPoly(f)), MathError);
}

TEST(FPoly, XgcdAndDivremProperties) {
    std::mt19937_64 rng(11);
    std::vector<FieldPtr> fields = {Field::prime(2), Field::prime(3), Field::make(2, 2, {1, 1, 1}), Field::prime(5)};
    for (auto& F : fields)
        for (int trial = 0; trial < 250; ++trial) {
            FPoly a = rand_poly(F.get(), rng, 8), b = rand_poly(F.get(), rng, 8);
            auto xg = xgcd(a, b);
            EXPECT_EQ(xg.u * a + xg.v * b, xg.g);
            if (!xg.g.is_zero()) EXPECT_EQ(xg.g.lc(), 1u);
            if (!b.is_zero()) {
                auto [s, t] = divrem(a, b);
                EXPECT_EQ(s * b + t, a);
                EXPECT_TRUE(t.is_zero() || t.deg() < b.deg());
            }
        }
}

TEST(FPoly, FactorAgreesWithTrialDivision) {
    std::mt19937_64 rng(5);
    std::vector<FieldPtr> fields = {Field::prime(2), Field::prime(3), Field::make(2, 2, {1, 1, 1}), Field::prime(5)};
    for (auto& F : fields)
        for (int trial = 0; trial < 60; ++trial) {
            FPoly a = rand_poly(F.get(), rng, 6);
            if (a.is_zero() || a.ideg() < 1) continue;
            auto fs = factor(a);
            FPoly prod = FPoly::constant(F.get(), 1);
            for (auto& f : fs) {
                EXPECT_TRUE(trial_irreducible(f.poly)) << f.poly.to_string();
                EXPECT_EQ(is_irreducible(f.poly), true);
                prod = prod * f.poly.pow(f.mult);
            }
            EXPECT_EQ(prod, a.monic());
            for (size_t i = 1; i < fs.size(); ++i) EXPECT_TRUE(poly_less(fs[i - 1].poly, fs[i].poly));
            EXPECT_EQ(is_irreducible(a), trial_irreducible(a.monic()));
            auto again = factor(a);
            ASSERT_EQ(again.size(), fs.size());
            for (size_t i = 0; i < fs.size(); ++i) EXPECT_EQ(again[i].poly, fs[i].poly);
        }
}
