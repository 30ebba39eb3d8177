#include "chainring/ideal.hpp"

#include <sstream>
#include <stdexcept>

namespace chainring {

namespace {

// Reduction against seq/bars; levels <= absorb_upto keep their whole layer as residue.
RPoly reduce_levels(const RPoly& f0, const std::vector<RPoly>& seq, const std::vector<FPoly>& bars, int absorb_upto) {
    const ChainRing* R = seq.empty() ? f0.ring() : seq[0].ring();
    const int N = R->N();
    RPoly f = f0, acc(R);
    for (int j = 0; j < N && !f.is_zero(); ++j) {
        FPoly layer = f.layer(j);
        if (layer.is_zero()) continue;
        RPoly sub(R);
        FPoly b(R->field_ptr());
        if (j > absorb_upto && !bars[j].is_zero()) {
            auto [q, rem] = divrem(layer, bars[j]);
            b = rem;
            sub = lift_poly(R, q) * seq[j] + lift_poly(R, b);
        } else {
            b = layer;
            sub = lift_poly(R, b);
        }
        f = f - sub.mul_pi(j);
        acc = acc + lift_poly(R, b).mul_pi(j);
    }
    return acc;
}

// Basis of {s : sum s_k a_k = 0} over F[x], via unimodular column operations.
std::vector<std::vector<FPoly>> syzygies(const std::vector<FPoly>& a0) {
    const size_t n = a0.size();
    const Field* F = a0[0].field();
    std::vector<FPoly> a = a0;
    std::vector<std::vector<FPoly>> U(n, std::vector<FPoly>(n, FPoly(F)));  // U[col][row]
    for (size_t i = 0; i < n; ++i) U[i][i] = FPoly::constant(F, 1);
    for (size_t i = 1; i < n; ++i) {
        if (a[i].is_zero()) continue;
        if (a[0].is_zero()) {
            std::swap(a[0], a[i]);
            std::swap(U[0], U[i]);
            continue;
        }
        auto xg = xgcd(a[0], a[i]);
        FPoly s = a[i] / xg.g, t = a[0] / xg.g;
        std::vector<FPoly> c0(n, FPoly(F)), ci(n, FPoly(F));
        for (size_t r = 0; r < n; ++r) {
            c0[r] = xg.u * U[0][r] + xg.v * U[i][r];
            ci[r] = t * U[i][r] - s * U[0][r];
        }
        U[0] = std::move(c0);
        U[i] = std::move(ci);
        a[0] = xg.g;
        a[i] = FPoly(F);
    }
    return {U.begin() + 1, U.end()};
}

// {h in V : h*q in I}, refined one pi-layer at a time.
Ideal preimage(const Ideal& V0, const RPoly& q, const Ideal& I) {
    const ChainRing* R = I.ring();
    const int N = R->N();
    Ideal V = V0;
    for (int j = 0; j < N; ++j) {
        if (V.is_zero()) break;
        auto gens = V.generators();
        std::vector<FPoly> phi;
        bool all_zero = true;
        for (auto& e : gens) {
            RPoly r = reduce(e * q, I);
            if (r.valuation() < j) throw std::logic_error("preimage: generator left the previous layer");
            phi.push_back(r.layer(j));
            all_zero = all_zero && phi.back().is_zero();
        }
        if (all_zero) continue;
        if (!I.alpha(j).is_zero()) phi.push_back(I.alpha(j));
        std::vector<RPoly> next;
        for (auto& e : gens) next.push_back(e.mul_pi(1));
        for (auto& s : syzygies(phi)) {
            RPoly h(R);
            for (size_t k = 0; k < gens.size(); ++k)
                if (!s[k].is_zero()) h = h + lift_poly(R, s[k]) * gens[k];
            next.push_back(h);
        }
        V = canonical_sequence(R, next);
    }
    return V;
}

}  // namespace

Ideal Ideal::zero(const ChainRing* R) {
    Ideal I;
    I.R_ = R;
    I.f_.assign(R->N(), RPoly(R));
    I.inv_.assign(R->N(), FPoly(R->field_ptr()));
    return I;
}

Ideal Ideal::unit(const ChainRing* R) {
    Ideal I;
    I.R_ = R;
    I.f_.assign(R->N(), RPoly::constant(R, 1));
    I.inv_.assign(R->N(), FPoly::constant(R->field_ptr(), 1));
    return I;
}

Ideal Ideal::from_canonical(const ChainRing* R, std::vector<RPoly> seq) {
    const int N = R->N();
    if (static_cast<int>(seq.size()) != N) throw std::invalid_argument("canonical sequence must have N entries");
    const Field& F = R->field();
    Ideal I = zero(R);
    for (int i = N - 1; i >= 0; --i) {
        RPoly g = seq[i].trunc(N - i);
        FPoly gb = bar(g);
        if (gb.is_zero()) continue;
        g = g.scale(R->lift(F.inv(gb.lc())));
        RPoly red = reduce_levels(g.mul_pi(i), I.f_, I.inv_, i);
        RPoly fi = strip_pi(red, i).trunc(N - i);
        FPoly fb = bar(fi);
        if (fi.ideg() != fb.ideg()) throw std::logic_error("sequence is not canonical: degree did not normalize");
        if (i + 1 < N && !divides(I.inv_[i + 1], fb))
            throw std::logic_error("sequence is not canonical: bars do not form a divisibility chain");
        I.f_[i] = std::move(fi);
        I.inv_[i] = std::move(fb);
    }
    return I;
}

bool Ideal::is_zero() const {
    for (auto& a : inv_)
        if (!a.is_zero()) return false;
    return true;
}

std::vector<RPoly> Ideal::generators() const {
    std::vector<RPoly> g;
    for (int i = 0; i < N(); ++i)
        if (!f_[i].is_zero()) g.push_back(f_[i].mul_pi(i));
    return g;
}

FPoly multi_xgcd(const std::vector<FPoly>& polys, std::vector<FPoly>& coeffs) {
    coeffs.clear();
    const Field* F = nullptr;
    for (auto& p : polys)
        if (p.field()) F = p.field();
    FPoly g(F);
    for (size_t k = 0; k < polys.size(); ++k) {
        if (polys[k].is_zero()) {
            coeffs.emplace_back(F);
            continue;
        }
        auto xg = xgcd(g, polys[k]);
        for (auto& c : coeffs) c = c * xg.u;
        coeffs.push_back(xg.v);
        g = xg.g;
        // keep cofactors small: once g = 1 further terms are unnecessary
        if (g.is_one()) {
            for (size_t m = k + 1; m < polys.size(); ++m) coeffs.emplace_back(F);
            break;
        }
    }
    return g;
}

Ideal canonical_sequence(const ChainRing* R, const std::vector<RPoly>& gens) {
    const int N = R->N();
    std::vector<RPoly> G;
    for (auto& g : gens) {
        if (g.ring() && !g.ring()->same_as(*R)) throw std::invalid_argument("generator over a different ring");
        RPoly t = g.trunc(N);
        if (!t.is_zero()) G.push_back(t);
    }
    std::vector<RPoly> f(N, RPoly(R));
    for (int i = 0; i < N; ++i) {
        const int prec = N - i;
        std::vector<FPoly> bars;
        bars.reserve(G.size());
        for (auto& g : G) bars.push_back(bar(g));
        std::vector<FPoly> co;
        FPoly d = multi_xgcd(bars, co);
        std::vector<RPoly> next;
        if (d.is_zero()) {
            for (auto& g : G) {
                RPoly s = strip_pi(g, 1).trunc(prec - 1);
                if (!s.is_zero()) next.push_back(std::move(s));
            }
            G = std::move(next);
            continue;
        }
        RPoly fi(R);
        for (size_t k = 0; k < G.size(); ++k)
            if (!co[k].is_zero()) fi = fi + lift_poly(R, co[k]) * G[k];
        fi = fi.trunc(prec);
        for (size_t k = 0; k < G.size(); ++k) {
            RPoly t = (G[k] - lift_poly(R, bars[k] / d) * fi).trunc(prec);
            RPoly s = strip_pi(t, 1).trunc(prec - 1);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        RPoly carry = fi.trunc(prec - 1);
        if (!carry.is_zero()) next.push_back(carry);
        f[i] = std::move(fi);
        G = std::move(next);
    }
    return Ideal::from_canonical(R, std::move(f));
}

RPoly reduce(const RPoly& f, const Ideal& I) {
    if (I.is_unit()) return RPoly(I.ring());
    return reduce_levels(f.trunc(I.N()), I.canonical(), I.invariant(), -1);
}

bool contains(const Ideal& I, const RPoly& f) { return reduce(f, I).is_zero(); }

bool is_subideal(const Ideal& I, const Ideal& J) {
    for (int i = 0; i < I.N(); ++i) {
        // divisibility of bars is necessary; cheap early exit
        if (!I.alpha(i).is_zero() && !J.alpha(i).is_zero() && !divides(J.alpha(i), I.alpha(i))) return false;
        if (!I.alpha(i).is_zero() && J.alpha(i).is_zero()) return false;
        if (!I.f(i).is_zero() && !contains(J, I.f(i).mul_pi(i))) return false;
    }
    return true;
}

bool equals(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) return false;
    if (I.invariant() != J.invariant()) return false;
    return is_subideal(I, J);
}

const InvariantSequence& invariant_sequence(const Ideal& I) { return I.invariant(); }

std::vector<RPoly> strong_groebner_basis(const Ideal& I) { return I.generators(); }

Ideal colon_pi(const Ideal& I) {
    const ChainRing* R = I.ring();
    std::vector<RPoly> seq(I.canonical().begin() + 1, I.canonical().end());
    seq.push_back(RPoly::constant(R, 1));
    return Ideal::from_canonical(R, std::move(seq));
}

Ideal colon_elem(const Ideal& I, const RPoly& p) {
    const ChainRing* R = I.ring();
    RPoly pp = p.trunc(R->N());
    if (pp.is_zero()) throw MathError("colon ideal by the zero polynomial");
    const int k = pp.valuation();
    Ideal Ik = I;
    for (int s = 0; s < k; ++s) Ik = colon_pi(Ik);
    return preimage(Ideal::unit(R), strip_pi(pp, k), Ik);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    const ChainRing* R = I.ring();
    if (R != J.ring()) throw std::invalid_argument("ideals over different rings");
    return preimage(J, RPoly::constant(R, 1), I);
}

Ideal sum(const Ideal& I, const Ideal& J) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ideals over different rings");
    if (I.is_zero()) return J;
    if (J.is_zero()) return I;
    auto g = I.generators();
    auto h = J.generators();
    g.insert(g.end(), h.begin(), h.end());
    return canonical_sequence(I.ring(), g);
}

bool invseq_less(const InvariantSequence& a, const InvariantSequence& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (a[i].is_zero()) return false;
        if (b[i].is_zero()) return true;
        return poly_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

std::string invseq_to_string(const InvariantSequence& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i].to_string();
    }
    os << ")";
    return os.str();
}

}  // namespace chainring
