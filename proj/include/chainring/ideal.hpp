#pragma once

#include <vector>

#include "chainring/rpoly.hpp"

namespace chainring {

using InvariantSequence = std::vector<FPoly>;

// Ideal of R[x], stored as a normalized canonical sequence (f_0, ..., f_{N-1}):
// bar(f_i) monic with deg f_i = deg bar(f_i), or f_i = 0 when bar(f_i) = 0.
// f_i is significant modulo pi^(N-i).
class Ideal {
public:
    Ideal() = default;

    static Ideal zero(const ChainRing* R);
    static Ideal unit(const ChainRing* R);
    // Normalizes a sequence that already satisfies the canonical-sequence property.
    static Ideal from_canonical(const ChainRing* R, std::vector<RPoly> seq);

    const ChainRing* ring() const { return R_; }
    int N() const { return R_->N(); }
    const std::vector<RPoly>& canonical() const { return f_; }
    const RPoly& f(int i) const { return f_[i]; }
    const InvariantSequence& invariant() const { return inv_; }
    const FPoly& alpha(int i) const { return inv_[i]; }

    bool is_unit() const { return !inv_.empty() && inv_[0].is_one(); }
    bool is_zero() const;
    // pi^i f_i for every level, zeros dropped.
    std::vector<RPoly> generators() const;

private:
    const ChainRing* R_ = nullptr;
    std::vector<RPoly> f_;
    InvariantSequence inv_;
};

Ideal canonical_sequence(const ChainRing* R, const std::vector<RPoly>& gens);

// Reduction b_0 + pi b_1 + ... + pi^{N-1} b_{N-1}; zero iff f is in I.
RPoly reduce(const RPoly& f, const Ideal& I);
bool contains(const Ideal& I, const RPoly& f);
bool is_subideal(const Ideal& I, const Ideal& J);
bool equals(const Ideal& I, const Ideal& J);
inline bool operator==(const Ideal& I, const Ideal& J) { return equals(I, J); }

const InvariantSequence& invariant_sequence(const Ideal& I);
std::vector<RPoly> strong_groebner_basis(const Ideal& I);

Ideal colon_pi(const Ideal& I);
Ideal colon_elem(const Ideal& I, const RPoly& p);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const Ideal& J);

// Combined multi-xgcd: returns coefficients c with sum c_k * polys_k = gcd (monic, or 0).
FPoly multi_xgcd(const std::vector<FPoly>& polys, std::vector<FPoly>& coeffs);

// Lexicographic comparison of invariant sequences for deterministic output.
bool invseq_less(const InvariantSequence& a, const InvariantSequence& b);
std::string invseq_to_string(const InvariantSequence& a);

}  // namespace chainring
