#include "chainring/residue_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace chainring {

namespace {

constexpr uint64_t kTableLimit = 512;

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------- Field

std::shared_ptr<const Field> Field::make(uint64_t p, int r, std::vector<uint64_t> modulus) {
    if (p >= (1ULL << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic must be a prime below 2^31");
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q >= (1ULL << 31)) throw std::invalid_argument("field size exceeds 2^31");
    }
    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->r_ = r;
    f->q_ = q;
    if (r == 1) {
        if (!modulus.empty() && modulus.size() != 2)
            throw std::invalid_argument("modulus of a prime field must be linear or empty");
        f->modulus_ = {0, 1};
    } else {
        if (static_cast<int>(modulus.size()) != r + 1)
            throw std::invalid_argument("modulus must have r+1 coefficients");
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        auto fp = Field::prime(p);
        std::vector<Field::Elem> mc(modulus.begin(), modulus.end());
        if (!is_irreducible(FPoly(fp.get(), mc)))
            throw std::invalid_argument("modulus is not irreducible over F_p");
        f->modulus_ = modulus;
    }
    if (q <= kTableLimit) {
        f->add_table_.resize(q * q);
        f->mul_table_.resize(q * q);
        f->inv_table_.assign(q, 0);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                auto ca = f->coeffs(a), cb = f->coeffs(b);
                for (int s = 0; s < r; ++s) ca[s] = (ca[s] + cb[s]) % p;
                f->add_table_[a * q + b] = f->from_coeffs(ca);
                f->mul_table_[a * q + b] = f->mul_slow(a, b);
            }
        for (Elem a = 1; a < q; ++a)
            for (Elem b = 1; b < q; ++b)
                if (f->mul_table_[a * q + b] == 1) {
                    f->inv_table_[a] = b;
                    break;
                }
    }
    return f;
}

std::vector<uint64_t> Field::coeffs(Elem a) const {
    std::vector<uint64_t> c(r_);
    uint64_t v = a;
    for (int s = 0; s < r_; ++s) {
        c[s] = v % p_;
        v /= p_;
    }
    return c;
}

Field::Elem Field::from_coeffs(const std::vector<uint64_t>& c) const {
    uint64_t v = 0;
    for (int s = r_ - 1; s >= 0; --s) v = v * p_ + (s < static_cast<int>(c.size()) ? c[s] % p_ : 0);
    return static_cast<Elem>(v);
}

Field::Elem Field::from_int(int64_t v) const {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += static_cast<int64_t>(p_);
    return static_cast<Elem>(m);
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    if (r_ == 1) return static_cast<Elem>((static_cast<uint64_t>(a) + b) % p_);
    auto ca = coeffs(a), cb = coeffs(b);
    for (int s = 0; s < r_; ++s) ca[s] = (ca[s] + cb[s]) % p_;
    return from_coeffs(ca);
}

Field::Elem Field::neg(Elem a) const {
    if (r_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_ - a);
    auto ca = coeffs(a);
    for (auto& c : ca) c = (p_ - c) % p_;
    return from_coeffs(ca);
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

Field::Elem Field::mul_slow(Elem a, Elem b) const {
    if (r_ == 1) return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p_);
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<uint64_t> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    for (int d = 2 * r_ - 2; d >= r_; --d) {
        uint64_t c = prod[d];
        if (c == 0) continue;
        for (int s = 0; s <= r_; ++s)
            prod[d - r_ + s] = (prod[d - r_ + s] + (p_ - c) * modulus_[s]) % p_;
    }
    prod.resize(r_);
    return from_coeffs(prod);
}

Field::Elem Field::pow(Elem a, uint64_t e) const {
    Elem result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) throw MathError("inverse of zero in residue field");
    if (!inv_table_.empty()) return inv_table_[a];
    return inv_slow(a);
}

Field::Elem Field::inv_slow(Elem a) const { return pow(a, q_ - 2); }

std::string Field::to_string(Elem a) const {
    if (r_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (int s = r_ - 1; s >= 0; --s) {
        if (c[s] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (s == 0) {
            os << c[s];
        } else {
            if (c[s] != 1) os << c[s] << "*";
            os << "z";
            if (s > 1) os << "^" << s;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- FPoly

FPoly::FPoly(const Field* f, std::vector<Field::Elem> c) : F_(f), c_(std::move(c)) { trim(); }

FPoly FPoly::constant(const Field* f, Field::Elem c) { return FPoly(f, {c}); }

FPoly FPoly::monomial(const Field* f, Field::Elem c, int d) {
    std::vector<Field::Elem> v(d + 1, 0);
    v[d] = c;
    return FPoly(f, std::move(v));
}

void FPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FPoly::check(const FPoly& o) const {
    if (F_ && o.F_ && !F_->same_as(*o.F_)) throw std::invalid_argument("polynomials over different fields");
}

FPoly FPoly::operator+(const FPoly& o) const {
    check(o);
    const Field* f = F_ ? F_ : o.F_;
    std::vector<Field::Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Field::Elem a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
        r[i] = f ? f->add(a, b) : 0;
    }
    return FPoly(f, std::move(r));
}

FPoly FPoly::operator-() const {
    FPoly r = *this;
    for (auto& c : r.c_) c = F_->neg(c);
    return r;
}

FPoly FPoly::operator-(const FPoly& o) const { return *this + (-o); }

FPoly FPoly::operator*(const FPoly& o) const {
    check(o);
    const Field* f = F_ ? F_ : o.F_;
    if (c_.empty() || o.c_.empty()) return FPoly(f);
    std::vector<Field::Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f->add(r[i + j], f->mul(c_[i], o.c_[j]));
    }
    return FPoly(f, std::move(r));
}

FPoly FPoly::scale(Field::Elem s) const {
    FPoly r = *this;
    for (auto& c : r.c_) c = F_->mul(c, s);
    r.trim();
    return r;
}

FPoly FPoly::shift(int k) const {
    if (c_.empty()) return *this;
    std::vector<Field::Elem> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return FPoly(F_, std::move(r));
}

FPoly FPoly::monic() const {
    if (c_.empty()) return *this;
    return scale(F_->inv(c_.back()));
}

FPoly FPoly::derivative() const {
    if (c_.size() <= 1) return FPoly(F_);
    std::vector<Field::Elem> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<int64_t>(i % F_->p())));
    return FPoly(F_, std::move(r));
}

FPoly FPoly::pow(uint64_t e) const {
    FPoly result = FPoly::constant(F_, 1), b = *this;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

std::string FPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = ideg(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        std::string coef = F_->to_string(c_[i]);
        bool compound = coef.find('+') != std::string::npos;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coef;
            continue;
        }
        if (coef != "1") os << (compound ? "(" + coef + ")" : coef) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<FPoly, FPoly> divrem(const FPoly& a, const FPoly& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    const Field* f = b.field();
    if (a.ideg() < b.ideg()) return {FPoly(f), a};
    std::vector<Field::Elem> r = a.coeffs();
    std::vector<Field::Elem> q(a.ideg() - b.ideg() + 1, 0);
    Field::Elem ilc = f->inv(b.lc());
    const auto& bc = b.coeffs();
    int db = b.ideg();
    for (int d = a.ideg(); d >= db; --d) {
        Field::Elem c = r[d];
        if (c == 0) continue;
        Field::Elem t = f->mul(c, ilc);
        q[d - db] = t;
        for (int s = 0; s <= db; ++s) r[d - db + s] = f->sub(r[d - db + s], f->mul(t, bc[s]));
    }
    return {FPoly(f, std::move(q)), FPoly(f, std::move(r))};
}

FPoly operator/(const FPoly& a, const FPoly& b) { return divrem(a, b).first; }
FPoly operator%(const FPoly& a, const FPoly& b) { return divrem(a, b).second; }

bool divides(const FPoly& d, const FPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

FPoly gcd(const FPoly& a, const FPoly& b) {
    FPoly x = a, y = b;
    while (!y.is_zero()) {
        FPoly t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x.monic();
}

XgcdResult xgcd(const FPoly& a, const FPoly& b) {
    const Field* f = a.field() ? a.field() : b.field();
    FPoly r0 = a, r1 = b;
    FPoly s0 = FPoly::constant(f, 1), s1(f);
    FPoly t0(f), t1 = FPoly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [qq, rr] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rr);
        FPoly s2 = s0 - qq * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FPoly t2 = t0 - qq * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {FPoly(f), FPoly(f), FPoly(f)};
    Field::Elem il = f->inv(r0.lc());
    return {r0.scale(il), s0.scale(il), t0.scale(il)};
}

FPoly powmod(const FPoly& base, uint64_t e, const FPoly& m) {
    FPoly result = FPoly::constant(m.field(), 1) % m, b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

bool poly_less(const FPoly& a, const FPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.coeffs() < b.coeffs();
}

int multiplicity(const FPoly& r, const FPoly& a) {
    if (a.is_zero()) throw MathError("multiplicity in the zero polynomial");
    int m = 0;
    FPoly t = a;
    while (true) {
        auto [qq, rr] = divrem(t, r);
        if (!rr.is_zero()) break;
        t = std::move(qq);
        ++m;
    }
    return m;
}

// ---------------------------------------------------------------- factorization

namespace {

using FactorList = std::vector<Factor>;

FPoly pth_root(const FPoly& a) {
    const Field* f = a.field();
    uint64_t p = f->p();
    std::vector<Field::Elem> r(a.ideg() / p + 1, 0);
    uint64_t e = f->q() / p;  // Frobenius inverse: c -> c^(q/p)
    for (int i = 0; i <= a.ideg(); i += static_cast<int>(p)) r[i / p] = f->pow(a.coeff(i), e);
    return FPoly(f, std::move(r));
}

// Square-free decomposition of a monic polynomial.
FactorList squarefree(const FPoly& a) {
    const Field* f = a.field();
    FactorList out;
    if (a.ideg() <= 0) return out;
    FPoly c = gcd(a, a.derivative());
    FPoly w = a / c;
    int i = 1;
    while (!w.is_one()) {
        FPoly y = gcd(w, c);
        FPoly z = w / y;
        if (!z.is_one()) out.push_back({z, i});
        ++i;
        w = y;
        c = c / y;
    }
    if (!c.is_one()) {
        FPoly root = pth_root(c).monic();
        for (auto& [g, m] : squarefree(root)) out.push_back({g, m * static_cast<int>(f->p())});
    }
    return out;
}

// Distinct-degree factorization of a square-free monic polynomial.
std::vector<std::pair<FPoly, int>> distinct_degree(FPoly a) {
    const Field* f = a.field();
    std::vector<std::pair<FPoly, int>> out;
    FPoly x = FPoly::x(f);
    FPoly h = x % a;
    int d = 0;
    while (a.ideg() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, f->q(), a);
        FPoly g = gcd(h - x, a);
        if (!g.is_one()) {
            out.push_back({g, d});
            a = a / g;
            h = h % a;
        }
    }
    if (a.ideg() > 0) out.push_back({a, a.ideg()});
    return out;
}

bool small_search_space(uint64_t q, int deg) {
    uint64_t v = 1;
    for (int i = 0; i < deg; ++i) {
        v *= q;
        if (v > (1ULL << 16)) return false;
    }
    return true;
}

// Finds a monic divisor of degree d by exhaustive search.
FPoly trial_divisor(const FPoly& a, int d) {
    const Field* f = a.field();
    uint64_t q = f->q();
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (uint64_t code = 0; code < total; ++code) {
        std::vector<Field::Elem> c(d + 1);
        uint64_t v = code;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<Field::Elem>(v % q);
            v /= q;
        }
        c[d] = 1;
        FPoly cand(f, std::move(c));
        if (divides(cand, a)) return cand;
    }
    throw std::logic_error("trial division found no divisor");
}

void equal_degree(const FPoly& a, int d, std::mt19937_64& rng, std::vector<FPoly>& out) {
    if (a.ideg() == d) {
        out.push_back(a);
        return;
    }
    const Field* f = a.field();
    uint64_t q = f->q();
    int n = a.ideg();
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Field::Elem> c(n);
        for (auto& v : c) v = static_cast<Field::Elem>(rng() % q);
        FPoly h(f, std::move(c));
        if (h.ideg() < 1) continue;
        FPoly b;
        if (q % 2 == 1) {
            // h^((q^d-1)/2) = (h^(1+q+...+q^(d-1)))^((q-1)/2)
            FPoly t = h, s = h;
            for (int i = 1; i < d; ++i) {
                t = powmod(t, q, a);
                s = (s * t) % a;
            }
            b = powmod(s, (q - 1) / 2, a) - FPoly::constant(f, 1);
        } else {
            int steps = f->r() * d;
            FPoly t = h % a, s = t;
            for (int i = 1; i < steps; ++i) {
                t = (t * t) % a;
                s = s + t;
            }
            b = s;
        }
        FPoly g = gcd(b, a);
        if (g.ideg() > 0 && g.ideg() < n) {
            equal_degree(g, d, rng, out);
            equal_degree(a / g, d, rng, out);
            return;
        }
    }
    if (!small_search_space(q, n)) throw std::runtime_error("equal-degree splitting did not converge");
    FPoly g = trial_divisor(a, d);
    out.push_back(g);
    equal_degree(a / g, d, rng, out);
}

}  // namespace

std::vector<Factor> factor(const FPoly& a) {
    if (a.is_zero()) throw MathError("factorization of the zero polynomial");
    std::mt19937_64 rng(kFactorSeed);
    std::vector<Factor> out;
    for (auto& [sf, m] : squarefree(a.monic())) {
        for (auto& [block, d] : distinct_degree(sf)) {
            std::vector<FPoly> irr;
            equal_degree(block, d, rng, irr);
            for (auto& g : irr) out.push_back({g, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return poly_less(x.poly, y.poly); });
    // The same irreducible can appear in several square-free layers only if
    // the decomposition is wrong; merge defensively anyway.
    std::vector<Factor> merged;
    for (auto& fc : out) {
        if (!merged.empty() && merged.back().poly == fc.poly)
            merged.back().mult += fc.mult;
        else
            merged.push_back(fc);
    }
    return merged;
}

bool is_irreducible(const FPoly& a) {
    if (a.is_zero()) throw MathError("irreducibility of the zero polynomial");
    if (a.ideg() < 1) return false;
    auto fs = factor(a);
    return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace chainring
