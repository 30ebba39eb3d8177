#include "chainring/chain_ring.hpp"

#include <sstream>

namespace chainring {

namespace {

constexpr uint64_t kRingTableLimit = 1024;

int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ChainRingSpec ChainRingSpec::zpm(uint64_t p, int m) {
    ChainRingSpec s;
    s.variant = Variant::Zpm;
    s.p = p;
    s.n = m;
    return s;
}

ChainRingSpec ChainRingSpec::fqu(uint64_t p, int r, std::vector<uint64_t> modulus, int e) {
    ChainRingSpec s;
    s.variant = Variant::FqU;
    s.p = p;
    s.r = r;
    s.modulus = std::move(modulus);
    s.e = e;
    s.n = 1;
    return s;
}

ChainRingSpec ChainRingSpec::galois(uint64_t p, int n, int r, std::vector<uint64_t> modulus) {
    ChainRingSpec s;
    s.variant = Variant::GaloisRing;
    s.p = p;
    s.n = n;
    s.r = r;
    s.modulus = std::move(modulus);
    return s;
}

ChainRingSpec ChainRingSpec::eisenstein(uint64_t p, int n, int r, std::vector<uint64_t> modulus,
                                        std::vector<std::vector<int64_t>> g, int t) {
    ChainRingSpec s;
    s.variant = Variant::Eisenstein;
    s.p = p;
    s.n = n;
    s.r = r;
    s.modulus = std::move(modulus);
    s.g = std::move(g);
    s.t = t;
    return s;
}

std::shared_ptr<const ChainRing> ChainRing::make(const ChainRingSpec& spec, uint64_t cap) {
    std::shared_ptr<ChainRing> R(new ChainRing());
    R->spec_ = spec;
    uint64_t p = spec.p;
    int n = spec.n, r = spec.r;
    using V = ChainRingSpec::Variant;
    if (spec.variant == V::Zpm) r = 1;
    if (spec.variant == V::FqU) n = 1;
    if (n < 1) throw std::invalid_argument("ring exponent must be >= 1");
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    R->field_ = Field::make(p, r, r > 1 ? spec.modulus : std::vector<uint64_t>{});
    R->p_ = p;
    R->n_ = n;
    R->r_ = r;
    R->pn_ = 1;
    for (int i = 0; i < n; ++i) {
        R->pn_ *= static_cast<int64_t>(p);
        if (R->pn_ > (1LL << 31)) throw std::invalid_argument("p^n exceeds 2^31");
    }
    R->pn1_ = R->pn_ / static_cast<int64_t>(p);
    if (r == 1) {
        R->hmod_ = {0, 1};
    } else {
        R->hmod_.resize(r + 1);
        for (int s = 0; s <= r; ++s) R->hmod_[s] = mod(static_cast<int64_t>(spec.modulus[s]), R->pn_);
    }

    auto s_const = [&](int64_t v) {
        std::vector<int64_t> c(r, 0);
        c[0] = mod(v, R->pn_);
        return c;
    };
    switch (spec.variant) {
    case V::Zpm:
    case V::GaloisRing:
        R->k_ = 1;
        R->t_ = 1;
        R->g_ = {s_const(-static_cast<int64_t>(p)), s_const(1)};
        break;
    case V::FqU:
        if (spec.e < 1) throw std::invalid_argument("FqU nilpotency must be >= 1");
        R->k_ = spec.e;
        R->t_ = spec.e;
        R->g_.assign(spec.e + 1, s_const(0));
        R->g_.back() = s_const(1);
        break;
    case V::Eisenstein: {
        if (spec.g.size() < 2) throw std::invalid_argument("Eisenstein polynomial must have degree >= 1");
        R->k_ = static_cast<int>(spec.g.size()) - 1;
        R->t_ = spec.t;
        for (auto& coef : spec.g) {
            if (coef.empty() || static_cast<int>(coef.size()) > r)
                throw std::invalid_argument("Eisenstein coefficient has wrong length");
            std::vector<int64_t> c(r, 0);
            for (size_t s = 0; s < coef.size(); ++s) c[s] = mod(coef[s], R->pn_);
            R->g_.push_back(c);
        }
        auto& lead = R->g_.back();
        if (lead[0] != 1) throw std::invalid_argument("Eisenstein polynomial must be monic");
        for (int s = 1; s < r; ++s)
            if (lead[s] != 0) throw std::invalid_argument("Eisenstein polynomial must be monic");
        for (int j = 0; j < R->k_; ++j)
            for (int s = 0; s < r; ++s)
                if (R->g_[j][s] % static_cast<int64_t>(p) != 0)
                    throw std::invalid_argument("Eisenstein polynomial: lower coefficients must be divisible by p");
        if (n >= 2) {
            bool unit = false;
            for (int s = 0; s < r; ++s)
                if ((R->g_[0][s] / static_cast<int64_t>(p)) % static_cast<int64_t>(p) != 0) unit = true;
            if (!unit) throw std::invalid_argument("Eisenstein polynomial: constant term over p must be a unit");
        }
        if (R->t_ < 1 || R->t_ > R->k_) throw std::invalid_argument("Eisenstein t must satisfy 1 <= t <= k");
        if (n == 1 && R->t_ != R->k_) throw std::invalid_argument("Eisenstein with n = 1 requires t = k");
        break;
    }
    }
    R->N_ = (n - 1) * R->k_ + R->t_;
    R->q_ = R->field_->q();
    R->size_ = 1;
    R->qpow_.assign(R->N_ + 1, 1);
    for (int i = 1; i <= R->N_; ++i) {
        R->qpow_[i] = R->qpow_[i - 1] * R->q_;
        if (R->qpow_[i] > cap) throw std::invalid_argument("ring size exceeds the configured cap");
    }
    R->size_ = R->qpow_[R->N_];

    // pi^N = 0 and pi^(N-1) != 0.
    {
        Amb y(static_cast<size_t>(2) * r, 0), pw = R->amb_zero();
        y[r] = 1;
        R->amb_normalize(y);
        pw[0] = 1;
        for (int i = 0; i < R->N_ - 1; ++i) pw = R->amb_mul(pw, y);
        bool nz = false;
        for (auto v : pw) nz |= v != 0;
        pw = R->amb_mul(pw, y);
        bool z = true;
        for (auto v : pw) z &= v == 0;
        if (!nz || !z) throw std::logic_error("nilpotency check failed");
    }

    // Ambient normal forms are a mixed-radix system of size q^N; index them both ways.
    {
        R->radix_.resize(static_cast<size_t>(R->k_) * r);
        for (int j = 0; j < R->k_; ++j)
            for (int s = 0; s < r; ++s) R->radix_[j * r + s] = j >= R->t_ ? R->pn1_ : R->pn_;
        R->pow_amb_.resize(static_cast<size_t>(R->N_) * R->q_);
        Amb ypow = R->amb_zero();
        ypow[0] = 1;
        for (int i = 0; i < R->N_; ++i) {
            for (uint64_t c = 0; c < R->q_; ++c)
                R->pow_amb_[i * R->q_ + c] = R->amb_mul(ypow, R->amb_lift(static_cast<Field::Elem>(c)));
            Amb y(static_cast<size_t>(2) * r, 0);
            y[r] = 1;
            R->amb_normalize(y);
            ypow = R->amb_mul(ypow, y);
        }
        uint64_t S = R->size_;
        std::vector<uint32_t> to_idx(S, 0);
        R->idx_to_code_.assign(S, static_cast<Elem>(-1));
        for (uint64_t a = 0; a < S; ++a) {
            uint64_t idx = R->amb_index(R->digits_to_amb(static_cast<Elem>(a)));
            if (idx >= S || R->idx_to_code_[idx] != static_cast<Elem>(-1))
                throw std::logic_error("digit expansion is not a bijection");
            to_idx[a] = static_cast<uint32_t>(idx);
            R->idx_to_code_[idx] = static_cast<Elem>(a);
        }
        R->code_to_idx_ = std::move(to_idx);
    }

    if (R->size_ <= kRingTableLimit) {
        uint64_t S = R->size_;
        std::vector<Amb> amb(S);
        for (uint64_t a = 0; a < S; ++a) amb[a] = R->digits_to_amb(static_cast<Elem>(a));
        R->add_table_.resize(S * S);
        R->mul_table_.resize(S * S);
        for (uint64_t a = 0; a < S; ++a)
            for (uint64_t b = a; b < S; ++b) {
                Elem s = R->amb_to_code(R->amb_add(amb[a], amb[b]));
                Elem m = R->amb_to_code(R->amb_mul(amb[a], amb[b]));
                R->add_table_[a * S + b] = R->add_table_[b * S + a] = s;
                R->mul_table_[a * S + b] = R->mul_table_[b * S + a] = m;
            }
    }
    return R;
}

std::string ChainRing::name() const {
    std::ostringstream os;
    using V = ChainRingSpec::Variant;
    switch (spec_.variant) {
    case V::Zpm: os << "Z_" << pn_; break;
    case V::GaloisRing: os << "GR(" << pn_ << "," << r_ << ")"; break;
    case V::FqU: os << "F_" << q_ << "[u]/(u^" << N_ << ")"; break;
    case V::Eisenstein: os << "GR(" << pn_ << "," << r_ << ")[y]/<g, " << pn1_ << "*y" << (t_ > 1 ? "^" + std::to_string(t_) : std::string()) << ">"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------- ambient arithmetic

ChainRing::Amb ChainRing::amb_lift(Field::Elem c) const {
    Amb a = amb_zero();
    auto co = field_->coeffs(c);
    for (int s = 0; s < r_; ++s) a[s] = static_cast<int64_t>(co[s]);
    return a;
}

ChainRing::Amb ChainRing::amb_add(const Amb& a, const Amb& b) const {
    Amb c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % pn_;
    amb_normalize(c);
    return c;
}

std::vector<int64_t> ChainRing::s_mul(const int64_t* a, const int64_t* b) const {
    if (r_ == 1) return {(a[0] * b[0]) % pn_};
    std::vector<int64_t> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % pn_;
    }
    for (int d = 2 * r_ - 2; d >= r_; --d) {
        int64_t c = prod[d];
        if (c == 0) continue;
        for (int s = 0; s < r_; ++s) prod[d - r_ + s] = mod(prod[d - r_ + s] - c * hmod_[s], pn_);
        prod[d] = 0;
    }
    prod.resize(r_);
    return prod;
}

ChainRing::Amb ChainRing::amb_mul(const Amb& a, const Amb& b) const {
    std::vector<int64_t> prod(static_cast<size_t>(2 * k_ - 1) * r_, 0);
    for (int i = 0; i < k_; ++i) {
        bool zero = true;
        for (int s = 0; s < r_; ++s) zero &= a[i * r_ + s] == 0;
        if (zero) continue;
        for (int j = 0; j < k_; ++j) {
            auto c = s_mul(&a[i * r_], &b[j * r_]);
            for (int s = 0; s < r_; ++s) prod[(i + j) * r_ + s] = (prod[(i + j) * r_ + s] + c[s]) % pn_;
        }
    }
    amb_normalize(prod);
    return prod;
}

// Reduces a vector of y-rows (any length >= k) to normal form, resizing to k rows.
void ChainRing::amb_normalize(Amb& a) const {
    int rows = static_cast<int>(a.size()) / r_;
    for (int d = rows - 1; d >= k_; --d) {
        const int64_t* c = &a[d * r_];
        bool zero = true;
        for (int s = 0; s < r_; ++s) zero &= c[s] == 0;
        if (zero) continue;
        std::vector<int64_t> cc(c, c + r_);
        for (int j = 0; j < k_; ++j) {
            auto t = s_mul(cc.data(), g_[j].data());
            for (int s = 0; s < r_; ++s) a[(d - k_ + j) * r_ + s] = mod(a[(d - k_ + j) * r_ + s] - t[s], pn_);
        }
        for (int s = 0; s < r_; ++s) a[d * r_ + s] = 0;
    }
    a.resize(static_cast<size_t>(k_) * r_);
    for (int j = 0; j < k_; ++j)
        for (int s = 0; s < r_; ++s) {
            int64_t m = j >= t_ ? pn1_ : pn_;
            a[j * r_ + s] = mod(a[j * r_ + s], m);
        }
}

uint64_t ChainRing::amb_index(const Amb& a) const {
    uint64_t idx = 0;
    for (size_t i = a.size(); i-- > 0;) idx = idx * static_cast<uint64_t>(radix_[i]) + static_cast<uint64_t>(a[i]);
    return idx;
}

ChainRing::Amb ChainRing::digits_to_amb(Elem a) const {
    Amb acc = amb_zero();
    if (!code_to_idx_.empty()) {
        uint64_t idx = code_to_idx_[a];
        for (size_t i = 0; i < acc.size(); ++i) {
            acc[i] = static_cast<int64_t>(idx % static_cast<uint64_t>(radix_[i]));
            idx /= static_cast<uint64_t>(radix_[i]);
        }
        return acc;
    }
    uint64_t v = a;
    for (int i = 0; i < N_; ++i) {
        const Amb& t = pow_amb_[i * q_ + v % q_];
        v /= q_;
        for (size_t j = 0; j < acc.size(); ++j) acc[j] = (acc[j] + t[j]) % radix_[j];
    }
    return acc;
}

ChainRing::Elem ChainRing::amb_to_code(const Amb& a) const { return idx_to_code_[amb_index(a)]; }

// ---------------------------------------------------------------- public element API

ChainRing::Elem ChainRing::add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[static_cast<uint64_t>(a) * size_ + b];
    return amb_to_code(amb_add(digits_to_amb(a), digits_to_amb(b)));
}

ChainRing::Elem ChainRing::neg(Elem a) const {
    if (a == 0) return 0;
    Amb x = digits_to_amb(a);
    for (auto& v : x) v = mod(-v, pn_);
    amb_normalize(x);
    return amb_to_code(x);
}

ChainRing::Elem ChainRing::mul(Elem a, Elem b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<uint64_t>(a) * size_ + b];
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1) return a;
    return amb_to_code(amb_mul(digits_to_amb(a), digits_to_amb(b)));
}

ChainRing::Elem ChainRing::inv(Elem a) const {
    if (!is_unit(a)) throw MathError("inverse of a non-unit in the chain ring");
    Elem x = lift(field_->inv(project(a)));
    Elem two = from_int(2);
    for (int it = 0; it < 64 && mul(a, x) != 1; ++it) x = mul(x, sub(two, mul(a, x)));
    if (mul(a, x) != 1) throw std::logic_error("unit inversion did not converge");
    return x;
}

ChainRing::Elem ChainRing::mul_pi(Elem a, int s) const {
    if (s <= 0) return a;
    if (s >= N_) return 0;
    return static_cast<Elem>((a % qpow_[N_ - s]) * qpow_[s]);
}

ChainRing::Elem ChainRing::div_pi(Elem a, int s) const {
    if (s <= 0) return a;
    if (s > N_ || a % qpow_[std::min(s, N_)] != 0) throw MathError("element not divisible by the requested power of pi");
    return static_cast<Elem>(a / qpow_[s]);
}

ChainRing::Elem ChainRing::trunc(Elem a, int m) const {
    if (m >= N_) return a;
    if (m <= 0) return 0;
    return static_cast<Elem>(a % qpow_[m]);
}

std::vector<Field::Elem> ChainRing::digits(Elem a) const {
    std::vector<Field::Elem> d(N_);
    uint64_t v = a;
    for (int i = 0; i < N_; ++i) {
        d[i] = static_cast<Field::Elem>(v % q_);
        v /= q_;
    }
    return d;
}

Field::Elem ChainRing::digit(Elem a, int i) const { return static_cast<Field::Elem>((a / qpow_[i]) % q_); }

ChainRing::Elem ChainRing::from_digits(const std::vector<Field::Elem>& d) const {
    uint64_t v = 0;
    for (int i = N_ - 1; i >= 0; --i) {
        Field::Elem di = i < static_cast<int>(d.size()) ? d[i] : 0;
        if (di >= q_) throw std::invalid_argument("digit out of range");
        v = v * q_ + di;
    }
    return static_cast<Elem>(v);
}

int ChainRing::valuation(Elem a) const {
    if (a == 0) return N_;
    int v = 0;
    while (a % q_ == 0) {
        a /= static_cast<Elem>(q_);
        ++v;
    }
    return v;
}

std::vector<ChainRing::Elem> ChainRing::enumerate_F_reps() const {
    std::vector<Elem> out(q_);
    for (uint64_t c = 0; c < q_; ++c) out[c] = lift(static_cast<Field::Elem>(c));
    return out;
}

std::vector<ChainRing::Elem> ChainRing::enumerate_elements() const {
    std::vector<Elem> out(size_);
    for (uint64_t c = 0; c < size_; ++c) out[c] = static_cast<Elem>(c);
    return out;
}

ChainRing::Elem ChainRing::from_int(int64_t v) const {
    Amb a = amb_zero();
    a[0] = mod(v, pn_);
    amb_normalize(a);
    return amb_to_code(a);
}

ChainRing::Elem ChainRing::from_ambient(const std::vector<std::vector<int64_t>>& coords) const {
    std::vector<int64_t> a(std::max<size_t>(coords.size(), k_) * r_, 0);
    for (size_t j = 0; j < coords.size(); ++j) {
        if (static_cast<int>(coords[j].size()) > r_) throw std::invalid_argument("ambient coordinate too long");
        for (size_t s = 0; s < coords[j].size(); ++s) a[j * r_ + s] = mod(coords[j][s], pn_);
    }
    amb_normalize(a);
    return amb_to_code(a);
}

std::vector<std::vector<int64_t>> ChainRing::to_ambient(Elem a) const {
    Amb x = digits_to_amb(a);
    std::vector<std::vector<int64_t>> out(k_, std::vector<int64_t>(r_));
    for (int j = 0; j < k_; ++j)
        for (int s = 0; s < r_; ++s) out[j][s] = x[j * r_ + s];
    return out;
}

std::string ChainRing::to_string(Elem a) const {
    auto amb = to_ambient(a);
    auto s_str = [&](const std::vector<int64_t>& c) {
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
    };
    using V = ChainRingSpec::Variant;
    if (spec_.variant == V::Zpm || spec_.variant == V::GaloisRing) return s_str(amb[0]);
    const char* var = spec_.variant == V::FqU ? "u" : "y";
    std::ostringstream os;
    bool first = true;
    for (int j = k_ - 1; j >= 0; --j) {
        bool zero = true;
        for (auto v : amb[j]) zero &= v == 0;
        if (zero) continue;
        if (!first) os << "+";
        first = false;
        std::string c = s_str(amb[j]);
        if (j == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << (c.find('+') != std::string::npos ? "(" + c + ")" : c) << "*";
        os << var;
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace chainring
