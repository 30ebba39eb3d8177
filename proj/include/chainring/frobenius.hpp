#pragma once

#include <optional>
#include <vector>

#include "chainring/ideal.hpp"

namespace chainring {

struct MaximalDetail {
    FPoly rbar;
    Ideal J;                        // [I:r] intersected with [I:pi]
    InvariantSequence annihilator;  // inv(J)
    bool box_cover = false;
};

struct LocalStep {
    int j = 0;
    RPoly v;
    Ideal K;
    bool member = false;
};

struct FrobeniusReport {
    bool artinian = false;
    bool local = false;
    std::optional<bool> frobenius;  // unset when not artinian (master test) or not local (local test)
    std::vector<MaximalDetail> maximal;
    // local path
    FPoly alpha;
    std::vector<int> exponents;
    std::vector<int> lambda;
    std::vector<LocalStep> steps;

    bool frobenius_and_local() const { return local && frobenius.value_or(false); }
};

bool is_artinian_quotient(const Ideal& I);
Ideal annihilator_of_maximal(const Ideal& I, const RPoly& p);
FrobeniusReport is_frobenius(const Ideal& I);

// inv(I) = (alpha^e_0, ..., alpha^e_{N-1}) with alpha irreducible and e_0 > 0.
bool local_exponents(const Ideal& I, FPoly& alpha, std::vector<int>& e);
bool is_local_quotient(const Ideal& I);
FrobeniusReport is_frobenius_local(const Ideal& I);

bool closed_form_frobenius_n2(const Ideal& I);

// b_{jk} with f_j = r^(e_j - e_{j+1}) f_{j+1} + sum_k pi^k b_{jk} f_{j+k+1}, r = lift(alpha), f_N = 1.
// Indexed b[j][k]; entries outside the range are zero.
std::vector<std::vector<FPoly>> extract_b_params(const Ideal& I, const FPoly& alpha, const std::vector<int>& e);
bool closed_form_frobenius_local_small_n(const Ideal& I);

}  // namespace chainring
