#pragma once

#include <cstdint>
#include <vector>

#include "chainring/ideal.hpp"

namespace chainring {

inline constexpr uint64_t kQuotientCap = 4096;

// Finite ring Q = R[x]/I with residues b_0 + pi b_1 + ... (deg b_j < deg alpha_j)
// and full addition and multiplication tables.
class QuotientTable {
public:
    using Idx = uint16_t;

    const ChainRing* ring() const { return R_; }
    const Ideal& ideal() const { return I_; }
    size_t size() const { return elems_.size(); }
    Idx zero() const { return 0; }
    Idx one() const { return one_; }
    const RPoly& element(size_t i) const { return elems_[i]; }
    Idx add(Idx a, Idx b) const { return add_[static_cast<size_t>(a) * size() + b]; }
    Idx mul(Idx a, Idx b) const { return mul_[static_cast<size_t>(a) * size() + b]; }
    // Index of the residue class of f.
    Idx index_of(const RPoly& f) const;

    friend QuotientTable build_quotient(const Ideal& I, uint64_t cap);

private:
    Idx index_of_reduced(const RPoly& r) const;

    const ChainRing* R_ = nullptr;
    Ideal I_;
    std::vector<int> deg_;  // deg alpha_j per level
    std::vector<RPoly> elems_;
    std::vector<Idx> add_, mul_;
    Idx one_ = 0;
};

QuotientTable build_quotient(const Ideal& I, uint64_t cap = kQuotientCap);

// Subset of Q as a bitset over element indices.
struct OracleIdeal {
    std::vector<uint64_t> bits;

    bool has(size_t i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i) { bits[i >> 6] |= uint64_t{1} << (i & 63); }
    size_t count() const;
    std::vector<uint32_t> members() const;
    bool subset_of(const OracleIdeal& o) const;
    bool operator==(const OracleIdeal& o) const { return bits == o.bits; }
    bool operator<(const OracleIdeal& o) const { return bits < o.bits; }
};

OracleIdeal principal_ideal(const QuotientTable& Q, QuotientTable::Idx a);
OracleIdeal ideal_sum(const QuotientTable& Q, const OracleIdeal& A, const OracleIdeal& B);
// Residues of the elements of J (J is assumed to contain I).
OracleIdeal image_of(const QuotientTable& Q, const Ideal& J);

std::vector<OracleIdeal> all_ideals(const QuotientTable& Q);
OracleIdeal annihilator(const QuotientTable& Q, const OracleIdeal& S);
std::vector<OracleIdeal> minimal_ideals(const QuotientTable& Q, const std::vector<OracleIdeal>& ideals);
std::vector<OracleIdeal> maximal_ideals(const QuotientTable& Q, const std::vector<OracleIdeal>& ideals);
OracleIdeal socle(const QuotientTable& Q, const std::vector<OracleIdeal>& ideals);

bool brute_is_frobenius(const QuotientTable& Q);
bool brute_is_frobenius_local(const QuotientTable& Q);

}  // namespace chainring
