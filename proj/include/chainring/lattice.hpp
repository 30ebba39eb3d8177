#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chainring/ideal.hpp"

namespace chainring {

// A divides B levelwise (alpha_i | beta_i; 0 is divisible by everything).
bool invseq_divides(const InvariantSequence& A, const InvariantSequence& B);
// A box-below B: B equals A with one nonzero level multiplied by an irreducible
// factor of alpha_{i-1}/alpha_i.
bool box_covers(const InvariantSequence& A, const InvariantSequence& B);
// Validates a divisibility chain of monic-or-zero polynomials.
void check_invseq(const InvariantSequence& A);

struct MaximalIdeal {
    RPoly r;
    Ideal M;
};
// Maximal ideals <r, pi> containing I; throws MathError when alpha_0 = 0 or I is the unit ideal.
std::vector<MaximalIdeal> maximal_ideals_over(const Ideal& I);

bool is_cover(const Ideal& I, const Ideal& J);

inline constexpr uint64_t kCoverSearchCap = 1ULL << 16;

// All J containing I whose invariant sequence is inv(I) with alpha_i replaced by alpha_i/rbar.
std::vector<Ideal> minimal_overideals_with_invseq(const Ideal& I, int level, const FPoly& rbar,
                                                  uint64_t cap = kCoverSearchCap);
// Existence criterion for the same family, evaluated by ideal membership.
bool cover_exists(const Ideal& I, int level, const FPoly& rbar);

struct Cover {
    int level;
    FPoly rbar;
    Ideal J;
};
std::vector<Cover> all_covers(const Ideal& I, uint64_t cap = kCoverSearchCap);

struct Param {
    int j, k;
    FPoly b;
};
struct ParamIdeal {
    InvariantSequence inv;
    std::vector<Param> params;
    Ideal ideal;
    std::string label() const;
};

inline constexpr uint64_t kEnumerationCap = 1ULL << 20;

// Number of ideals with invariant sequence A, as a product of powers of q.
uint64_t predicted_count(const ChainRing* R, const InvariantSequence& A);
std::vector<ParamIdeal> enumerate_ideals_with_invseq(const ChainRing* R, const InvariantSequence& A,
                                                     uint64_t cap = kEnumerationCap);
// Invariant sequences below A_top, exponent vectors in lexicographic order.
std::vector<InvariantSequence> invseqs_below(const InvariantSequence& A_top);
std::vector<ParamIdeal> enumerate_downset(const ChainRing* R, const InvariantSequence& A_top,
                                          uint64_t cap = kEnumerationCap);

using Edge = std::pair<int, int>;  // lower -> upper
std::vector<std::vector<bool>> inclusion_matrix(const std::vector<Ideal>& ideals);
std::vector<Edge> hasse_diagram(const std::vector<Ideal>& ideals);
std::vector<Edge> transitive_reduction(const std::vector<std::vector<bool>>& incl);
std::string dot_export(const std::vector<std::string>& labels, const std::vector<Edge>& edges);

}  // namespace chainring
