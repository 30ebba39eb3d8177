#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chainring {

// Thrown when an input violates a mathematical precondition.
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Polynomial degree with deg 0 = infinity as a distinct value.
class Degree {
public:
    constexpr Degree() = default;
    constexpr explicit Degree(int d) : value_(d), finite_(true) {}
    static constexpr Degree infinity() { return Degree(); }

    constexpr bool is_infinite() const { return !finite_; }
    constexpr int value() const {
        if (!finite_) throw std::logic_error("degree of zero polynomial");
        return value_;
    }

    constexpr bool operator==(const Degree& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    constexpr std::strong_ordering operator<=>(const Degree& o) const {
        if (!finite_ || !o.finite_) return o.finite_ <=> finite_;
        return value_ <=> o.value_;
    }

private:
    int value_ = 0;
    bool finite_ = false;
};

// Finite field F_q, q = p^r, presented as F_p[z]/(modulus).
// Elements are codes c_0 + c_1 p + ... + c_{r-1} p^{r-1} with 0 <= c_s < p.
class Field {
public:
    using Elem = uint32_t;

    // modulus: r+1 little-endian coefficients, monic, irreducible mod p.
    // For r == 1 the modulus may be left empty.
    static std::shared_ptr<const Field> make(uint64_t p, int r, std::vector<uint64_t> modulus = {});
    static std::shared_ptr<const Field> prime(uint64_t p) { return make(p, 1); }

    uint64_t p() const { return p_; }
    int r() const { return r_; }
    uint64_t q() const { return q_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, uint64_t e) const;
    Elem from_int(int64_t v) const;

    std::vector<uint64_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<uint64_t>& c) const;
    std::string to_string(Elem a) const;

    // z, the class of the polynomial variable, when r > 1; 1 otherwise.
    Elem generator() const { return r_ > 1 ? static_cast<Elem>(p_) : 1; }

    bool same_as(const Field& o) const { return this == &o || (p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_); }

private:
    Field() = default;
    Elem mul_slow(Elem a, Elem b) const;
    Elem inv_slow(Elem a) const;

    uint64_t p_ = 2;
    int r_ = 1;
    uint64_t q_ = 2;
    std::vector<uint64_t> modulus_;
    std::vector<Elem> add_table_, mul_table_, inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Polynomial over a Field, little-endian, no trailing zeros.
class FPoly {
public:
    FPoly() = default;
    explicit FPoly(const Field* f) : F_(f) {}
    FPoly(const Field* f, std::vector<Field::Elem> c);

    static FPoly constant(const Field* f, Field::Elem c);
    static FPoly monomial(const Field* f, Field::Elem c, int d);
    static FPoly x(const Field* f) { return monomial(f, 1, 1); }

    const Field* field() const { return F_; }
    const std::vector<Field::Elem>& coeffs() const { return c_; }
    Field::Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Degree deg() const { return c_.empty() ? Degree::infinity() : Degree(static_cast<int>(c_.size()) - 1); }
    // -1 for the zero polynomial; internal convenience.
    int ideg() const { return static_cast<int>(c_.size()) - 1; }
    Field::Elem lc() const { return c_.empty() ? 0 : c_.back(); }

    FPoly operator+(const FPoly& o) const;
    FPoly operator-(const FPoly& o) const;
    FPoly operator-() const;
    FPoly operator*(const FPoly& o) const;
    FPoly scale(Field::Elem s) const;
    FPoly shift(int k) const;
    FPoly monic() const;
    FPoly derivative() const;
    FPoly pow(uint64_t e) const;

    bool operator==(const FPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    void check(const FPoly& o) const;

    const Field* F_ = nullptr;
    std::vector<Field::Elem> c_;
};

// a = s*b + t with t == 0 or deg t < deg b.
std::pair<FPoly, FPoly> divrem(const FPoly& a, const FPoly& b);
FPoly operator/(const FPoly& a, const FPoly& b);
FPoly operator%(const FPoly& a, const FPoly& b);
bool divides(const FPoly& d, const FPoly& a);

FPoly gcd(const FPoly& a, const FPoly& b);

struct XgcdResult {
    FPoly g, u, v;  // u*a + v*b = g, g monic or zero
};
XgcdResult xgcd(const FPoly& a, const FPoly& b);

FPoly powmod(const FPoly& base, uint64_t e, const FPoly& m);

struct Factor {
    FPoly poly;
    int mult = 0;
};

// Factors sorted by (degree, little-endian coefficient codes).
std::vector<Factor> factor(const FPoly& a);
bool is_irreducible(const FPoly& a);

// Multiplicity of the irreducible r in a (a != 0).
int multiplicity(const FPoly& r, const FPoly& a);

// Total order on polynomials used for deterministic output.
bool poly_less(const FPoly& a, const FPoly& b);

// Seed used by equal-degree splitting.
inline constexpr uint64_t kFactorSeed = 0x5eed'c4a1'0000'0001ULL;

}  // namespace chainring
