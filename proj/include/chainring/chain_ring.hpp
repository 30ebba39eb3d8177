#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chainring/residue_field.hpp"

namespace chainring {

// Parameters of a finite commutative chain ring.
//
// Every variant is realised as S[y]/<g, p^(n-1) y^t> where S = GR(p^n, r):
//   Zpm        S = Z/p^m,         g = y - p,   pi = p
//   GaloisRing S = GR(p^n, r),    g = y - p,   pi = p
//   FqU        S = F_q (n = 1),   g = y^e,     pi = u
//   Eisenstein S = GR(p^n, r),    g given,     pi = y
struct ChainRingSpec {
    enum class Variant { Zpm, FqU, GaloisRing, Eisenstein };
    Variant variant = Variant::Zpm;
    uint64_t p = 2;
    int n = 1;                          // m for Zpm
    int r = 1;
    std::vector<uint64_t> modulus;      // residue-field modulus, r+1 coefficients (r > 1)
    int e = 1;                          // FqU nilpotency
    std::vector<std::vector<int64_t>> g;  // Eisenstein polynomial, k+1 coefficients, each an S element
    int t = 1;

    static ChainRingSpec zpm(uint64_t p, int m);
    static ChainRingSpec fqu(uint64_t p, int r, std::vector<uint64_t> modulus, int e);
    static ChainRingSpec galois(uint64_t p, int n, int r, std::vector<uint64_t> modulus);
    static ChainRingSpec eisenstein(uint64_t p, int n, int r, std::vector<uint64_t> modulus,
                                    std::vector<std::vector<int64_t>> g, int t);
};

inline constexpr uint64_t kDefaultRingCap = 1ULL << 20;

// A finite commutative chain ring. Elements are codes d_0 + d_1 q + ... + d_{N-1} q^(N-1)
// where a = sum pi^i lift(d_i) and the d_i are residue-field codes.
class ChainRing : public std::enable_shared_from_this<ChainRing> {
public:
    using Elem = uint32_t;

    static std::shared_ptr<const ChainRing> make(const ChainRingSpec& spec, uint64_t cap = kDefaultRingCap);

    const ChainRingSpec& spec() const { return spec_; }
    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_.get(); }
    FieldPtr field_shared() const { return field_; }
    int N() const { return N_; }
    uint64_t q() const { return q_; }
    uint64_t size() const { return size_; }
    std::string name() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem pi() const { return N_ > 1 ? static_cast<Elem>(q_) : 0; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem unit) const;

    // pi^s * a and a / pi^s (the latter requires valuation(a) >= s; exact digit shift).
    Elem mul_pi(Elem a, int s) const;
    Elem div_pi(Elem a, int s) const;
    // a mod pi^m: drops digits m..N-1.
    Elem trunc(Elem a, int m) const;
    Elem pi_pow(int s) const { return mul_pi(1, s); }

    std::vector<Field::Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Field::Elem>& d) const;
    Field::Elem digit(Elem a, int i) const;

    Field::Elem project(Elem a) const { return static_cast<Field::Elem>(a % q_); }
    Elem lift(Field::Elem c) const { return c; }

    bool is_unit(Elem a) const { return project(a) != 0; }
    int valuation(Elem a) const;

    std::vector<Elem> enumerate_F_reps() const;
    std::vector<Elem> enumerate_elements() const;

    // Integer n * 1.
    Elem from_int(int64_t v) const;
    // Class of the residue-field generator z lifted to R (1 when r == 1).
    Elem z() const { return lift(field_->generator()); }
    // Element given by its ambient coordinates: k rows (powers of y), r integers each.
    Elem from_ambient(const std::vector<std::vector<int64_t>>& coords) const;
    std::vector<std::vector<int64_t>> to_ambient(Elem a) const;
    std::string to_string(Elem a) const;

    bool same_as(const ChainRing& o) const { return this == &o; }

private:
    ChainRing() = default;
    using Amb = std::vector<int64_t>;  // k*r integers, index j*r + s

    Amb amb_zero() const { return Amb(static_cast<size_t>(k_) * r_, 0); }
    Amb amb_lift(Field::Elem c) const;
    Amb amb_add(const Amb& a, const Amb& b) const;
    Amb amb_mul(const Amb& a, const Amb& b) const;
    void amb_normalize(Amb& a) const;
    uint64_t amb_index(const Amb& a) const;
    Amb digits_to_amb(Elem a) const;
    Elem amb_to_code(const Amb& a) const;
    // S = GR(p^n, r) helpers on r-vectors.
    std::vector<int64_t> s_mul(const int64_t* a, const int64_t* b) const;

    ChainRingSpec spec_;
    FieldPtr field_;
    uint64_t p_ = 2;
    int n_ = 1, r_ = 1, k_ = 1, t_ = 1, N_ = 1;
    int64_t pn_ = 2, pn1_ = 1;  // p^n, p^(n-1)
    uint64_t q_ = 2, size_ = 2;
    std::vector<int64_t> hmod_;            // S modulus in z (r+1 integers)
    std::vector<std::vector<int64_t>> g_;  // g coefficients (k+1) in S
    std::vector<int64_t> radix_;           // modulus of each ambient coordinate
    std::vector<Amb> pow_amb_;             // pi^i lift(c), index i*q + c
    std::vector<uint32_t> code_to_idx_;
    std::vector<Elem> idx_to_code_;
    std::vector<uint64_t> qpow_;
    std::vector<Elem> add_table_, mul_table_;
};

using RingPtr = std::shared_ptr<const ChainRing>;

}  // namespace chainring
