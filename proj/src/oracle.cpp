#include "chainring/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace chainring {

namespace {

OracleIdeal empty_set(const QuotientTable& Q) { return OracleIdeal{std::vector<uint64_t>((Q.size() + 63) / 64, 0)}; }

}  // namespace

size_t OracleIdeal::count() const {
    size_t c = 0;
    for (auto w : bits) c += std::popcount(w);
    return c;
}

std::vector<uint32_t> OracleIdeal::members() const {
    std::vector<uint32_t> out;
    for (size_t w = 0; w < bits.size(); ++w)
        for (uint64_t b = bits[w]; b; b &= b - 1) out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(b)));
    return out;
}

bool OracleIdeal::subset_of(const OracleIdeal& o) const {
    for (size_t w = 0; w < bits.size(); ++w)
        if (bits[w] & ~o.bits[w]) return false;
    return true;
}

QuotientTable::Idx QuotientTable::index_of_reduced(const RPoly& r) const {
    // mixed radix: level j, coefficient k < deg_j, digit base q
    const uint64_t q = R_->q();
    uint64_t idx = 0, scale = 1;
    for (int j = 0; j < R_->N(); ++j) {
        FPoly b = r.layer(j);
        if (!b.is_zero() && b.ideg() >= deg_[j]) throw std::logic_error("residue exceeds level degree");
        for (int k = 0; k < deg_[j]; ++k) {
            idx += scale * (k <= b.ideg() ? b.coeff(k) : 0);
            scale *= q;
        }
    }
    return static_cast<Idx>(idx);
}

QuotientTable::Idx QuotientTable::index_of(const RPoly& f) const { return index_of_reduced(reduce(f, I_)); }

QuotientTable build_quotient(const Ideal& I, uint64_t cap) {
    const ChainRing* R = I.ring();
    if (I.alpha(0).is_zero()) throw MathError("quotient is infinite (alpha_0 = 0)");
    cap = std::min<uint64_t>(cap, 65535);
    QuotientTable Q;
    Q.R_ = R;
    Q.I_ = I;
    const uint64_t q = R->q();
    uint64_t total = 1;
    int digits = 0;
    for (int j = 0; j < I.N(); ++j) {
        int d = I.alpha(j).ideg();
        Q.deg_.push_back(d);
        digits += d;
        for (int k = 0; k < d; ++k) {
            total *= q;
            if (total > cap) throw MathError("quotient larger than cap " + std::to_string(cap));
        }
    }
    const Field* F = R->field_ptr();
    Q.elems_.reserve(total);
    std::vector<Field::Elem> dig(digits, 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t t = idx;
        for (auto& d : dig) {
            d = static_cast<Field::Elem>(t % q);
            t /= q;
        }
        RPoly e(R);
        int pos = 0;
        for (int j = 0; j < I.N(); ++j) {
            std::vector<Field::Elem> c(dig.begin() + pos, dig.begin() + pos + Q.deg_[j]);
            pos += Q.deg_[j];
            e = e + lift_poly(R, FPoly(F, c)).mul_pi(j);
        }
        Q.elems_.push_back(e);
    }
    const size_t n = total;
    Q.one_ = Q.index_of(RPoly::constant(R, 1));
    Q.add_.resize(n * n);
    Q.mul_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            auto s = Q.index_of(Q.elems_[a] + Q.elems_[b]);
            auto m = Q.index_of(Q.elems_[a] * Q.elems_[b]);
            Q.add_[a * n + b] = Q.add_[b * n + a] = s;
            Q.mul_[a * n + b] = Q.mul_[b * n + a] = m;
        }
    return Q;
}

OracleIdeal principal_ideal(const QuotientTable& Q, QuotientTable::Idx a) {
    OracleIdeal out = empty_set(Q);
    for (size_t b = 0; b < Q.size(); ++b) out.set(Q.mul(a, static_cast<QuotientTable::Idx>(b)));
    return out;
}

OracleIdeal ideal_sum(const QuotientTable& Q, const OracleIdeal& A, const OracleIdeal& B) {
    OracleIdeal out = empty_set(Q);
    auto ma = A.members(), mb = B.members();
    for (auto a : ma)
        for (auto b : mb) out.set(Q.add(static_cast<QuotientTable::Idx>(a), static_cast<QuotientTable::Idx>(b)));
    return out;
}

OracleIdeal image_of(const QuotientTable& Q, const Ideal& J) {
    OracleIdeal out = empty_set(Q);
    for (size_t i = 0; i < Q.size(); ++i)
        if (contains(J, Q.element(i))) out.set(i);
    return out;
}

std::vector<OracleIdeal> all_ideals(const QuotientTable& Q) {
    std::set<OracleIdeal> principal;
    for (size_t a = 0; a < Q.size(); ++a) principal.insert(principal_ideal(Q, static_cast<QuotientTable::Idx>(a)));
    std::set<OracleIdeal> seen(principal.begin(), principal.end());
    std::vector<OracleIdeal> work(principal.begin(), principal.end());
    while (!work.empty()) {
        OracleIdeal A = std::move(work.back());
        work.pop_back();
        for (const auto& P : principal) {
            if (P.subset_of(A) || A.subset_of(P)) continue;
            OracleIdeal S = ideal_sum(Q, A, P);
            if (seen.insert(S).second) work.push_back(std::move(S));
        }
    }
    return {seen.begin(), seen.end()};
}

OracleIdeal annihilator(const QuotientTable& Q, const OracleIdeal& S) {
    OracleIdeal out = empty_set(Q);
    auto ms = S.members();
    for (size_t a = 0; a < Q.size(); ++a) {
        bool kills = true;
        for (auto s : ms)
            if (Q.mul(static_cast<QuotientTable::Idx>(a), static_cast<QuotientTable::Idx>(s)) != Q.zero()) {
                kills = false;
                break;
            }
        if (kills) out.set(a);
    }
    return out;
}

std::vector<OracleIdeal> minimal_ideals(const QuotientTable&, const std::vector<OracleIdeal>& ideals) {
    std::vector<OracleIdeal> out;
    for (const auto& A : ideals) {
        if (A.count() == 1) continue;
        bool minimal = true;
        for (const auto& B : ideals)
            if (B.count() > 1 && B.count() < A.count() && B.subset_of(A)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(A);
    }
    return out;
}

std::vector<OracleIdeal> maximal_ideals(const QuotientTable& Q, const std::vector<OracleIdeal>& ideals) {
    std::vector<OracleIdeal> out;
    for (const auto& A : ideals) {
        if (A.count() == Q.size()) continue;
        bool maximal = true;
        for (const auto& B : ideals)
            if (B.count() < Q.size() && B.count() > A.count() && A.subset_of(B)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(A);
    }
    return out;
}

OracleIdeal socle(const QuotientTable& Q, const std::vector<OracleIdeal>& ideals) {
    OracleIdeal s = empty_set(Q);
    s.set(Q.zero());
    for (const auto& M : minimal_ideals(Q, ideals)) s = ideal_sum(Q, s, M);
    return s;
}

bool brute_is_frobenius(const QuotientTable& Q) {
    auto ideals = all_ideals(Q);
    auto mins = minimal_ideals(Q, ideals);
    for (const auto& M : maximal_ideals(Q, ideals)) {
        OracleIdeal A = annihilator(Q, M);
        if (std::find(mins.begin(), mins.end(), A) == mins.end()) return false;
    }
    return true;
}

bool brute_is_frobenius_local(const QuotientTable& Q) { return minimal_ideals(Q, all_ideals(Q)).size() == 1; }

}  // namespace chainring
