#include "chainring/frobenius.hpp"

#include <stdexcept>

#include "chainring/lattice.hpp"

namespace chainring {

namespace {

void require_proper(const Ideal& I) {
    if (I.is_unit()) throw MathError("the quotient by the unit ideal is the zero ring");
}

}  // namespace

bool is_artinian_quotient(const Ideal& I) {
    require_proper(I);
    return !I.alpha(0).is_zero();
}

Ideal annihilator_of_maximal(const Ideal& I, const RPoly& p) { return intersect(colon_elem(I, p), colon_pi(I)); }

FrobeniusReport is_frobenius(const Ideal& I) {
    FrobeniusReport rep;
    rep.artinian = is_artinian_quotient(I);
    rep.local = is_local_quotient(I);
    if (!rep.artinian) return rep;
    const ChainRing* R = I.ring();
    bool ok = true;
    for (auto& fac : factor(I.alpha(0))) {
        Ideal J = annihilator_of_maximal(I, lift_poly(R, fac.poly));
        MaximalDetail d{fac.poly, J, J.invariant(), box_covers(J.invariant(), I.invariant())};
        ok = ok && d.box_cover;
        rep.maximal.push_back(std::move(d));
    }
    rep.frobenius = ok;
    return rep;
}

bool local_exponents(const Ideal& I, FPoly& alpha, std::vector<int>& e) {
    require_proper(I);
    const FPoly& a0 = I.alpha(0);
    if (a0.is_zero()) return false;
    auto facs = factor(a0);
    if (facs.size() != 1) return false;
    alpha = facs[0].poly;
    e.assign(I.N(), 0);
    for (int j = 0; j < I.N(); ++j) e[j] = multiplicity(alpha, I.alpha(j));
    return true;
}

bool is_local_quotient(const Ideal& I) {
    FPoly a;
    std::vector<int> e;
    return local_exponents(I, a, e);
}

FrobeniusReport is_frobenius_local(const Ideal& I) {
    FrobeniusReport rep;
    rep.artinian = is_artinian_quotient(I);
    rep.local = local_exponents(I, rep.alpha, rep.exponents);
    if (!rep.local) return rep;
    const ChainRing* R = I.ring();
    const int N = I.N();
    const auto& e = rep.exponents;
    int last = 0;
    for (int j = 0; j < N; ++j)
        if (e[j] > 0) last = j;
    for (int j = 0; j < last; ++j)
        if (e[j] > e[j + 1]) rep.lambda.push_back(j);
    RPoly r = lift_poly(R, rep.alpha);
    auto f_at = [&](int j) { return j < N ? I.f(j) : RPoly::constant(R, 1); };
    bool ok = true;
    for (int j : rep.lambda) {
        RPoly v = (I.f(j) - r.pow(e[j] - e[j + 1]) * f_at(j + 1)).mul_pi(j);
        std::vector<RPoly> gens;
        for (int s = j + 1; s < N; ++s) gens.push_back(I.f(s).mul_pi(s));
        for (int s = j + 2; s <= N; ++s) gens.push_back((r * f_at(s)).mul_pi(s - 1));
        Ideal K = canonical_sequence(R, gens);
        bool member = contains(K, v);
        ok = ok && !member;
        rep.steps.push_back({j, v, K, member});
    }
    rep.frobenius = ok;
    return rep;
}

bool closed_form_frobenius_n2(const Ideal& I) {
    const ChainRing* R = I.ring();
    if (I.N() != 2) throw MathError("closed form requires nilpotency 2");
    require_proper(I);
    if (I.alpha(0).is_zero()) throw MathError("closed form requires I not contained in <pi>");
    auto facs = factor(I.alpha(0));
    RPoly prod = RPoly::constant(R, 1);
    for (auto& fac : facs) prod = prod * lift_poly(R, fac.poly).pow(fac.mult);
    FPoly s = bar(strip_pi((I.f(0) - prod).trunc(2), 1));
    for (auto& fac : facs) {
        int u = fac.mult;
        int v = multiplicity(fac.poly, I.alpha(1));
        bool w_zero = !s.is_zero() && multiplicity(fac.poly, s) == 0;
        if (!(v == 0 || w_zero || u == v)) return false;
    }
    return true;
}

std::vector<std::vector<FPoly>> extract_b_params(const Ideal& I, const FPoly& alpha, const std::vector<int>& e) {
    const ChainRing* R = I.ring();
    const int N = I.N();
    const Field* F = R->field_ptr();
    RPoly r = lift_poly(R, alpha);
    auto f_at = [&](int j) { return j < N ? I.f(j) : RPoly::constant(R, 1); };
    std::vector<std::vector<FPoly>> b(N, std::vector<FPoly>(N + 1, FPoly(F)));
    for (int j = 0; j < N; ++j) {
        int ej1 = j + 1 < N ? e[j + 1] : 0;
        RPoly rem = (I.f(j) - r.pow(e[j] - ej1) * f_at(j + 1)).trunc(N - j);
        for (int k = 1; k <= N - j - 1; ++k) {
            FPoly layer = rem.layer(k);
            FPoly div = bar(f_at(j + k + 1));
            auto [qt, rr] = divrem(layer, div);
            if (!rr.is_zero()) throw std::logic_error("parameter extraction: layer not divisible");
            b[j][k] = qt;
            rem = (rem - (lift_poly(R, qt) * f_at(j + k + 1)).mul_pi(k)).trunc(N - j);
        }
        if (!rem.is_zero()) throw std::logic_error("parameter extraction left a remainder");
    }
    return b;
}

bool closed_form_frobenius_local_small_n(const Ideal& I) {
    const int N = I.N();
    if (N < 2 || N > 4) throw MathError("closed forms cover nilpotency 2, 3, 4");
    FPoly alpha;
    std::vector<int> e;
    if (!local_exponents(I, alpha, e)) throw MathError("closed form requires a local artinian quotient");
    auto b = extract_b_params(I, alpha, e);
    // r-bar does not divide x
    auto nd = [&](const FPoly& x) { return !x.is_zero() && !divides(alpha, x); };
    // gaps g_j: e_j > e_{j+1}, with e_N = 0
    unsigned mask = 0;
    int count = 0;
    for (int j = 0; j < N; ++j) {
        int next = j + 1 < N ? e[j + 1] : 0;
        if (e[j] > next) {
            mask |= 1u << j;
            ++count;
        }
    }
    if (count == 1) return true;
    auto B = [&](int j, int k) -> const FPoly& { return b[j][k]; };
    if (N == 2) return nd(B(0, 1));
    if (N == 3) {
        switch (mask) {
        case 0b110: return nd(B(1, 1));
        case 0b101: return nd(B(0, 2) - B(0, 1) * B(1, 1));
        case 0b011: return nd(B(0, 1));
        case 0b111: return nd(B(1, 1)) && nd(B(0, 1));
        }
    }
    if (N == 4) {
        switch (mask) {
        case 0b1100: return nd(B(2, 1));
        case 0b1010: return nd(B(1, 2) - B(1, 1) * B(2, 1));
        case 0b0110: return nd(B(1, 1));
        case 0b1110: return nd(B(2, 1)) && nd(B(1, 1));
        case 0b1001: return nd(B(2, 1) * (B(0, 2) - B(0, 1) * B(1, 1)) - (B(0, 3) - B(0, 1) * B(1, 2)));
        case 0b0101: return nd(B(0, 2) - B(0, 1) * B(1, 1));
        case 0b0011: return nd(B(0, 1));
        case 0b1101: return nd(B(2, 1)) && nd(B(0, 2) - B(0, 1) * B(1, 1));
        case 0b1011: return nd(B(1, 2) - B(1, 1) * B(2, 1)) && nd(B(0, 1));
        case 0b0111: return nd(B(1, 1)) && nd(B(0, 1));
        case 0b1111: return nd(B(2, 1)) && nd(B(1, 1)) && nd(B(0, 1));
        }
    }
    throw std::logic_error("exponent pattern not covered by the closed forms");
}

}  // namespace chainring
