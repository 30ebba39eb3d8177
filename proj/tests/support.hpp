#pragma once

// Shared fixtures for the test suites: rings, random generators, and an
// independent membership oracle in T = R[x]/<m> for monic m.

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "chainring/ideal.hpp"

namespace testsupport {

using namespace chainring;
using RingPtr = std::shared_ptr<const ChainRing>;

inline RingPtr z8() { return ChainRing::make(ChainRingSpec::zpm(2, 3)); }
inline RingPtr z4() { return ChainRing::make(ChainRingSpec::zpm(2, 2)); }
inline RingPtr z9() { return ChainRing::make(ChainRingSpec::zpm(3, 2)); }
inline RingPtr zpm(uint64_t p, int m) { return ChainRing::make(ChainRingSpec::zpm(p, m)); }
inline RingPtr gr4_2() { return ChainRing::make(ChainRingSpec::galois(2, 2, 2, {1, 1, 1})); }
inline RingPtr f2u(int e) { return ChainRing::make(ChainRingSpec::fqu(2, 1, {}, e)); }
inline RingPtr f4u(int e) { return ChainRing::make(ChainRingSpec::fqu(2, 2, {1, 1, 1}, e)); }
inline RingPtr f3u(int e) { return ChainRing::make(ChainRingSpec::fqu(3, 1, {}, e)); }
// Z4[pi]/(pi^2 - 2, 2 pi), nilpotency 3.
inline RingPtr eis() { return ChainRing::make(ChainRingSpec::eisenstein(2, 2, 1, {}, {{-2}, {0}, {1}}, 1)); }

using Rng = std::mt19937_64;

inline ChainRing::Elem rand_elem(const ChainRing* R, Rng& rng) {
    return static_cast<ChainRing::Elem>(std::uniform_int_distribution<uint64_t>(0, R->size() - 1)(rng));
}

inline RPoly rand_rpoly(const ChainRing* R, Rng& rng, int maxdeg) {
    std::vector<ChainRing::Elem> c(std::uniform_int_distribution<int>(0, maxdeg)(rng) + 1);
    for (auto& x : c) x = rand_elem(R, rng);
    return RPoly(R, c);
}

inline FPoly rand_fpoly(const Field* F, Rng& rng, int maxdeg) {
    std::vector<Field::Elem> c(std::uniform_int_distribution<int>(0, maxdeg)(rng) + 1);
    for (auto& x : c) x = static_cast<Field::Elem>(std::uniform_int_distribution<uint64_t>(0, F->q() - 1)(rng));
    return FPoly(F, c);
}

inline RPoly rand_monic(const ChainRing* R, Rng& rng, int deg) {
    RPoly f = rand_rpoly(R, rng, deg - 1).trunc(R->N());
    std::vector<ChainRing::Elem> c = f.coeffs();
    c.resize(deg + 1, 0);
    c[deg] = 1;
    return RPoly(R, c);
}

// Random generator set; with_monic adds a monic generator so the quotient is finite.
inline std::vector<RPoly> rand_gens(const ChainRing* R, Rng& rng, int count, int maxdeg, bool with_monic,
                                    int monic_deg = 2) {
    std::vector<RPoly> g;
    if (with_monic) g.push_back(rand_monic(R, rng, monic_deg));
    for (int i = 0; i < count; ++i) {
        RPoly f = rand_rpoly(R, rng, maxdeg);
        int s = std::uniform_int_distribution<int>(0, R->N() - 1)(rng);
        g.push_back(f.mul_pi(s));
    }
    return g;
}

// Ideal in local form: f_N = 1, f_j = r^(e_j - e_{j+1}) f_{j+1} + sum_k pi^k b_jk f_{j+k+1}.
struct LocalForm {
    std::vector<RPoly> f;                 // f_0..f_{N-1}
    std::vector<std::vector<RPoly>> b;    // b[j][k]
};

inline LocalForm local_form(const ChainRing* R, const FPoly& alpha, const std::vector<int>& e, Rng& rng,
                            int bdeg) {
    const int N = R->N();
    RPoly r = lift_poly(R, alpha);
    LocalForm L;
    L.f.assign(N + 1, RPoly::constant(R, 1));
    L.b.assign(N, std::vector<RPoly>(N + 1, RPoly(R)));
    for (int j = N - 1; j >= 0; --j) {
        int next = j + 1 < N ? e[j + 1] : 0;
        RPoly fj = r.pow(e[j] - next) * L.f[j + 1];
        for (int k = 1; k <= N - j - 1; ++k) {
            RPoly bjk = rand_rpoly(R, rng, bdeg);
            if (std::bernoulli_distribution(0.25)(rng)) bjk = RPoly(R);
            L.b[j][k] = bjk;
            fj = fj + (bjk * L.f[j + k + 1]).mul_pi(k);
        }
        L.f[j] = fj;
    }
    L.f.pop_back();
    return L;
}

inline Ideal local_form_ideal(const ChainRing* R, const LocalForm& L) {
    std::vector<RPoly> g;
    for (size_t j = 0; j < L.f.size(); ++j) g.push_back(L.f[j].mul_pi(static_cast<int>(j)));
    return canonical_sequence(R, g);
}

// Random exponent pattern e_0 >= ... >= e_{N-1} >= 0 with e_0 > 0.
inline std::vector<int> rand_exponents(int N, Rng& rng, int maxe = 3) {
    std::vector<int> e(N);
    int cur = std::uniform_int_distribution<int>(1, maxe)(rng);
    for (int j = 0; j < N; ++j) {
        e[j] = cur;
        cur = std::uniform_int_distribution<int>(0, cur)(rng);
    }
    return e;
}

// Finite ring T = R[x]/<m>, m monic of degree D, elements as coefficient vectors.
// Ideal spans are computed by additive closure, with no use of canonical sequences.
class MonicQuotient {
public:
    MonicQuotient(const ChainRing* R, RPoly m) : R_(R), m_(std::move(m)), D_(m_.ideg()) {}

    std::vector<ChainRing::Elem> mod(const RPoly& f) const {
        std::vector<ChainRing::Elem> c = f.coeffs();
        for (int d = static_cast<int>(c.size()) - 1; d >= D_; --d) {
            ChainRing::Elem t = c[d];
            if (t == 0) continue;
            for (int i = 0; i <= D_; ++i) c[d - D_ + i] = R_->sub(c[d - D_ + i], R_->mul(t, m_.coeff(i)));
        }
        c.resize(D_, 0);
        return c;
    }

    uint64_t code(const std::vector<ChainRing::Elem>& v) const {
        uint64_t k = 0;
        for (int i = D_ - 1; i >= 0; --i) k = k * R_->size() + v[i];
        return k;
    }

    // Additive closure of {c * x^k * g mod m}: the image of the ideal generated by gens.
    std::unordered_set<uint64_t> span(const std::vector<RPoly>& gens) const {
        std::vector<std::vector<ChainRing::Elem>> W;
        auto elems = R_->enumerate_elements();
        for (auto& g : gens)
            for (int k = 0; k < D_; ++k) {
                auto base = mod(g.shift(k));
                for (auto c : elems) {
                    std::vector<ChainRing::Elem> v(D_);
                    for (int i = 0; i < D_; ++i) v[i] = R_->mul(c, base[i]);
                    W.push_back(v);
                }
            }
        std::unordered_set<uint64_t> seen;
        std::vector<std::vector<ChainRing::Elem>> queue{std::vector<ChainRing::Elem>(D_, 0)};
        seen.insert(0);
        while (!queue.empty()) {
            auto s = std::move(queue.back());
            queue.pop_back();
            for (auto& w : W) {
                std::vector<ChainRing::Elem> t(D_);
                for (int i = 0; i < D_; ++i) t[i] = R_->add(s[i], w[i]);
                if (seen.insert(code(t)).second) queue.push_back(std::move(t));
            }
        }
        return seen;
    }

    bool member(const std::unordered_set<uint64_t>& span, const RPoly& f) const { return span.count(code(mod(f))) > 0; }
    int degree() const { return D_; }

private:
    const ChainRing* R_;
    RPoly m_;
    int D_;
};

}  // namespace testsupport

namespace testsupport {

// All polynomials of degree < D with coefficients in R (|R|^D of them).
inline std::vector<chainring::RPoly> all_polys_below(const chainring::ChainRing* R, int D) {
    std::vector<chainring::RPoly> out;
    uint64_t total = 1;
    for (int i = 0; i < D; ++i) total *= R->size();
    for (uint64_t k = 0; k < total; ++k) {
        std::vector<chainring::ChainRing::Elem> c(D);
        uint64_t t = k;
        for (int i = 0; i < D; ++i) {
            c[i] = static_cast<chainring::ChainRing::Elem>(t % R->size());
            t /= R->size();
        }
        out.emplace_back(R, c);
    }
    return out;
}

}  // namespace testsupport

namespace chainring {

// Readable values in test failure messages.
inline void PrintTo(const RPoly& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const FPoly& f, std::ostream* os) { *os << f.to_string(); }

}  // namespace chainring
