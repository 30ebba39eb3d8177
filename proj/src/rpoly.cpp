#include "chainring/rpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chainring {

RPoly::RPoly(const ChainRing* R, std::vector<Elem> c) : R_(R), c_(std::move(c)) { trim(); }

RPoly RPoly::constant(const ChainRing* R, Elem c) { return RPoly(R, {c}); }

RPoly RPoly::monomial(const ChainRing* R, Elem c, int d) {
    std::vector<Elem> v(d + 1, 0);
    v[d] = c;
    return RPoly(R, std::move(v));
}

void RPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void RPoly::check(const RPoly& o) const {
    if (R_ && o.R_ && !R_->same_as(*o.R_)) throw std::invalid_argument("polynomials over different rings");
}

RPoly RPoly::operator+(const RPoly& o) const {
    check(o);
    const ChainRing* R = R_ ? R_ : o.R_;
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Elem a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
        r[i] = R->add(a, b);
    }
    return RPoly(R, std::move(r));
}

RPoly RPoly::operator-() const {
    RPoly r = *this;
    for (auto& c : r.c_) c = R_->neg(c);
    return r;
}

RPoly RPoly::operator-(const RPoly& o) const {
    if (o.is_zero()) return *this;
    return *this + (-o);
}

RPoly RPoly::operator*(const RPoly& o) const {
    check(o);
    const ChainRing* R = R_ ? R_ : o.R_;
    if (c_.empty() || o.c_.empty()) return RPoly(R);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] = R->add(r[i + j], R->mul(c_[i], o.c_[j]));
    }
    return RPoly(R, std::move(r));
}

RPoly RPoly::scale(Elem s) const {
    RPoly r = *this;
    for (auto& c : r.c_) c = R_->mul(c, s);
    r.trim();
    return r;
}

RPoly RPoly::mul_pi(int s) const {
    RPoly r = *this;
    for (auto& c : r.c_) c = R_->mul_pi(c, s);
    r.trim();
    return r;
}

RPoly RPoly::shift(int k) const {
    if (c_.empty()) return *this;
    std::vector<Elem> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return RPoly(R_, std::move(r));
}

RPoly RPoly::trunc(int m) const {
    RPoly r = *this;
    for (auto& c : r.c_) c = R_->trunc(c, m);
    r.trim();
    return r;
}

RPoly RPoly::pow(unsigned e) const {
    RPoly result = RPoly::constant(R_, 1), b = *this;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

int RPoly::valuation() const {
    if (!R_) return 0;
    int v = R_->N();
    for (auto c : c_) v = std::min(v, R_->valuation(c));
    return v;
}

FPoly RPoly::layer(int i) const {
    std::vector<Field::Elem> d(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) d[j] = R_->digit(c_[j], i);
    return FPoly(R_->field_ptr(), std::move(d));
}

std::string RPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = ideg(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        std::string coef = R_->to_string(c_[i]);
        bool compound = coef.find('+') != std::string::npos;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coef;
            continue;
        }
        if (coef != "1") os << (compound ? "(" + coef + ")" : coef) << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::vector<std::vector<uint32_t>> RPoly::digit_matrix() const {
    std::vector<std::vector<uint32_t>> m;
    for (auto c : c_) {
        auto d = R_->digits(c);
        m.emplace_back(d.begin(), d.end());
    }
    return m;
}

RPoly RPoly::from_digit_matrix(const ChainRing* R, const std::vector<std::vector<uint32_t>>& m) {
    std::vector<Elem> c;
    for (auto& row : m) {
        if (static_cast<int>(row.size()) > R->N()) throw std::invalid_argument("digit row longer than nilpotency");
        std::vector<Field::Elem> d(row.begin(), row.end());
        c.push_back(R->from_digits(d));
    }
    return RPoly(R, std::move(c));
}

FPoly bar(const RPoly& f) {
    std::vector<Field::Elem> d(f.coeffs().size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = f.ring()->project(f.coeffs()[j]);
    return FPoly(f.ring() ? f.ring()->field_ptr() : nullptr, std::move(d));
}

RPoly lift_poly(const ChainRing* R, const FPoly& g) {
    std::vector<ChainRing::Elem> c(g.coeffs().size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = R->lift(g.coeffs()[j]);
    return RPoly(R, std::move(c));
}

DivRem divrem_unit(const RPoly& f, const RPoly& d) {
    const ChainRing* R = d.ring();
    if (d.is_zero() || !R->is_unit(d.lc())) throw MathError("divisor must have a unit leading coefficient");
    if (f.ideg() < d.ideg()) return {RPoly(R), f};
    std::vector<ChainRing::Elem> r = f.coeffs();
    std::vector<ChainRing::Elem> q(f.ideg() - d.ideg() + 1, 0);
    ChainRing::Elem ilc = R->inv(d.lc());
    const auto& dc = d.coeffs();
    int dd = d.ideg();
    for (int k = f.ideg(); k >= dd; --k) {
        ChainRing::Elem c = r[k];
        if (c == 0) continue;
        ChainRing::Elem t = R->mul(c, ilc);
        q[k - dd] = t;
        for (int s = 0; s <= dd; ++s) r[k - dd + s] = R->sub(r[k - dd + s], R->mul(t, dc[s]));
    }
    return {RPoly(R, std::move(q)), RPoly(R, std::move(r))};
}

RPoly strip_pi(const RPoly& f, int s) {
    if (f.is_zero() || s <= 0) return f;
    const ChainRing* R = f.ring();
    std::vector<ChainRing::Elem> c(f.coeffs().size());
    for (size_t j = 0; j < c.size(); ++j) c[j] = R->div_pi(f.coeffs()[j], s);
    return RPoly(R, std::move(c));
}

bool lt_divides(const RPoly& g, const RPoly& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    const ChainRing* R = f.ring();
    return g.ideg() <= f.ideg() && R->valuation(g.lc()) <= R->valuation(f.lc());
}

// ---------------------------------------------------------------- parsing

namespace {

// Recursive-descent parser over a ring-like value type.
template <class T, class Atom>
class ExprParser {
public:
    ExprParser(const std::string& s, Atom atom, T one) : s_(s), atom_(atom), one_(one) {}

    T parse() {
        T v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    T expr() {
        skip();
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        T v = term();
        if (negate) v = -v;
        while (true) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else break;
        }
        return v;
    }
    T term() {
        T v = factor();
        while (true) {
            skip();
            if (eat('*')) {
                v = v * factor();
                continue;
            }
            // implicit multiplication: "2x", "x(x+1)"
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                     static_cast<unsigned char>(s_[pos_]) >= 0x80)) {
                v = v * factor();
                continue;
            }
            break;
        }
        return v;
    }
    T factor() {
        T b = primary();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 6) fail("exponent too large");
            long e = std::stol(s_.substr(start, pos_ - start));
            if (e > 4096) fail("exponent too large");
            T r = one_;
            for (long i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }
    T primary() {
        skip();
        if (eat('(')) {
            T v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (num.size() > 15) fail("integer literal too large");
            return atom_("#" + num);
        }
        // identifiers: ASCII letters or the UTF-8 sequence for pi
        if (s_.compare(pos_, 2, "\xCF\x80") == 0) {
            pos_ += 2;
            return atom_("pi");
        }
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a term");
        return atom_(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    Atom atom_;
    T one_;
    size_t pos_ = 0;
};

}  // namespace

RPoly parse_rpoly(const ChainRing* R, const std::string& text) {
    using V = ChainRingSpec::Variant;
    auto atom = [R](const std::string& tok) -> RPoly {
        if (tok[0] == '#') return RPoly::constant(R, R->from_int(std::stoll(tok.substr(1))));
        if (tok == "x") return RPoly::x(R);
        if (tok == "pi") return RPoly::constant(R, R->pi());
        if (tok == "u" && R->spec().variant == V::FqU) return RPoly::constant(R, R->pi());
        if (tok == "y" && R->spec().variant == V::Eisenstein) return RPoly::constant(R, R->pi());
        if (tok == "z" && R->field().r() > 1) return RPoly::constant(R, R->z());
        throw std::invalid_argument("unknown symbol '" + tok + "' in polynomial");
    };
    ExprParser<RPoly, decltype(atom)> parser(text, atom, RPoly::constant(R, 1));
    return parser.parse();
}

FPoly parse_fpoly(const Field* F, const std::string& text) {
    auto atom = [F](const std::string& tok) -> FPoly {
        if (tok[0] == '#') return FPoly::constant(F, F->from_int(std::stoll(tok.substr(1)) % static_cast<int64_t>(F->p())));
        if (tok == "x") return FPoly::x(F);
        if (tok == "z" && F->r() > 1) return FPoly::constant(F, F->generator());
        throw std::invalid_argument("unknown symbol '" + tok + "' in residue-field polynomial");
    };
    ExprParser<FPoly, decltype(atom)> parser(text, atom, FPoly::constant(F, 1));
    return parser.parse();
}

}  // namespace chainring
