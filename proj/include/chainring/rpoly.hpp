#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chainring/chain_ring.hpp"
#include "chainring/residue_field.hpp"

namespace chainring {

// Polynomial over a chain ring, little-endian, no trailing zeros.
class RPoly {
public:
    using Elem = ChainRing::Elem;

    RPoly() = default;
    explicit RPoly(const ChainRing* R) : R_(R) {}
    RPoly(const ChainRing* R, std::vector<Elem> c);

    static RPoly constant(const ChainRing* R, Elem c);
    static RPoly monomial(const ChainRing* R, Elem c, int d);
    static RPoly x(const ChainRing* R) { return monomial(R, 1, 1); }
    static RPoly pi_pow(const ChainRing* R, int s) { return constant(R, R->pi_pow(s)); }

    const ChainRing* ring() const { return R_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    bool is_zero() const { return c_.empty(); }
    Degree deg() const { return c_.empty() ? Degree::infinity() : Degree(static_cast<int>(c_.size()) - 1); }
    int ideg() const { return static_cast<int>(c_.size()) - 1; }
    Elem lc() const { return c_.empty() ? 0 : c_.back(); }

    RPoly operator+(const RPoly& o) const;
    RPoly operator-(const RPoly& o) const;
    RPoly operator-() const;
    RPoly operator*(const RPoly& o) const;
    RPoly& operator+=(const RPoly& o) { return *this = *this + o; }
    RPoly& operator-=(const RPoly& o) { return *this = *this - o; }
    RPoly scale(Elem s) const;
    RPoly mul_pi(int s) const;
    RPoly shift(int k) const;
    // Coefficients reduced modulo pi^m.
    RPoly trunc(int m) const;
    RPoly pow(unsigned e) const;

    // Minimum pi-valuation over the coefficients (N for the zero polynomial).
    int valuation() const;
    // Digit layer i as a polynomial over the residue field.
    FPoly layer(int i) const;

    bool operator==(const RPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RPoly& o) const { return !(*this == o); }

    std::string to_string() const;
    // digit matrix: one row per coefficient, N digits each.
    std::vector<std::vector<uint32_t>> digit_matrix() const;
    static RPoly from_digit_matrix(const ChainRing* R, const std::vector<std::vector<uint32_t>>& m);

private:
    void trim();
    void check(const RPoly& o) const;

    const ChainRing* R_ = nullptr;
    std::vector<Elem> c_;
};

FPoly bar(const RPoly& f);
RPoly lift_poly(const ChainRing* R, const FPoly& g);

struct DivRem {
    RPoly quot, rem;
};
// f = quot*d + rem with rem == 0 or deg rem < deg d; lc(d) must be a unit.
DivRem divrem_unit(const RPoly& f, const RPoly& d);

// g with pi^s g = f, digits shifted down; requires every coefficient to have valuation >= s.
RPoly strip_pi(const RPoly& f, int s);

// Leading term of g divides the leading term of f.
bool lt_divides(const RPoly& g, const RPoly& f);

// Parses "2*x - 4", "pi*x^2 + (1+pi)", "u*x", "z*x + 1" etc. into R[x].
RPoly parse_rpoly(const ChainRing* R, const std::string& text);
// Parses a polynomial over the residue field, e.g. "x^2 + z*x + 1".
FPoly parse_fpoly(const Field* F, const std::string& text);

}  // namespace chainring
