#include "chainring/lattice.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "chainring/parallel.hpp"

namespace chainring {

namespace {

FPoly one_poly(const ChainRing* R) { return FPoly::constant(R->field_ptr(), 1); }

// alpha_N = 1 convention.
FPoly alpha_at(const InvariantSequence& A, int j, const ChainRing* R) {
    return j < static_cast<int>(A.size()) ? A[j] : one_poly(R);
}

RPoly f_at(const Ideal& I, int j) { return j < I.N() ? I.f(j) : RPoly::constant(I.ring(), 1); }

// Ideal generated by pi^j f_j for j >= from.
Ideal tail_ideal(const Ideal& I, int from) {
    std::vector<RPoly> seq(I.N(), RPoly(I.ring()));
    for (int j = from; j < I.N(); ++j) seq[j] = I.f(j);
    return Ideal::from_canonical(I.ring(), std::move(seq));
}

}  // namespace

bool invseq_divides(const InvariantSequence& A, const InvariantSequence& B) {
    if (A.size() != B.size()) return false;
    for (size_t i = 0; i < A.size(); ++i) {
        if (B[i].is_zero()) continue;
        if (A[i].is_zero() || !divides(A[i], B[i])) return false;
    }
    return true;
}

bool box_covers(const InvariantSequence& A, const InvariantSequence& B) {
    if (A.size() != B.size()) return false;
    int diff = -1;
    for (size_t i = 0; i < A.size(); ++i)
        if (A[i] != B[i]) {
            if (diff >= 0) return false;
            diff = static_cast<int>(i);
        }
    if (diff < 0) return false;
    const FPoly &a = A[diff], &b = B[diff];
    if (a.is_zero() || b.is_zero()) return false;
    auto [gamma, rem] = divrem(b, a);
    if (!rem.is_zero() || !is_irreducible(gamma)) return false;
    // gamma | alpha_{i-1}/alpha_i, i.e. gamma*alpha_i | alpha_{i-1}
    if (diff > 0 && !A[diff - 1].is_zero() && !divides(b, A[diff - 1])) return false;
    return true;
}

void check_invseq(const InvariantSequence& A) {
    for (size_t i = 0; i < A.size(); ++i) {
        if (!A[i].is_zero() && A[i].lc() != 1) throw std::invalid_argument("invariant sequence entries must be monic");
        if (i + 1 < A.size()) {
            if (A[i + 1].is_zero() && !A[i].is_zero())
                throw std::invalid_argument("invariant sequence is not a divisibility chain");
            if (!A[i].is_zero() && !divides(A[i + 1], A[i]))
                throw std::invalid_argument("invariant sequence is not a divisibility chain");
        }
    }
}

std::vector<MaximalIdeal> maximal_ideals_over(const Ideal& I) {
    const ChainRing* R = I.ring();
    if (I.is_unit()) throw MathError("the unit ideal has no maximal ideals above it");
    if (I.alpha(0).is_zero()) throw MathError("alpha_0 = 0: infinitely many maximal ideals (quotient not artinian)");
    std::vector<MaximalIdeal> out;
    for (auto& fac : factor(I.alpha(0))) {
        RPoly r = lift_poly(R, fac.poly);
        out.push_back({r, canonical_sequence(R, {r, RPoly::pi_pow(R, 1)})});
    }
    return out;
}

bool is_cover(const Ideal& I, const Ideal& J) {
    return box_covers(J.invariant(), I.invariant()) && is_subideal(I, J);
}

static void check_cover_args(const Ideal& I, int i, const FPoly& rbar) {
    const ChainRing* R = I.ring();
    if (i < 0 || i >= I.N()) throw std::invalid_argument("level out of range");
    const FPoly& ai = I.alpha(i);
    FPoly an = alpha_at(I.invariant(), i + 1, R);
    if (ai.is_zero()) throw MathError("cover level must have alpha_i != 0");
    if (ai == an) throw MathError("cover level must have alpha_i != alpha_{i+1}");
    if (!is_irreducible(rbar) || !divides(rbar, ai / an)) throw MathError("r must be an irreducible factor of alpha_i/alpha_{i+1}");
}

bool cover_exists(const Ideal& I, int i, const FPoly& rbar) {
    check_cover_args(I, i, rbar);
    const ChainRing* R = I.ring();
    const int N = I.N();
    FPoly an = alpha_at(I.invariant(), i + 1, R);
    RPoly r = lift_poly(R, rbar);
    RPoly u = lift_poly(R, I.alpha(i) / (rbar * an));
    RPoly v = (I.f(i) - u * r * f_at(I, i + 1)).mul_pi(i);
    Ideal lower = tail_ideal(I, i + 1);
    Ideal col = colon_pi(tail_ideal(I, std::min(i + 2, N)));
    if (i + 2 > N) col = Ideal::unit(R);
    std::vector<RPoly> gens = lower.generators();
    for (auto& g : col.generators()) gens.push_back(r * g);
    return contains(canonical_sequence(R, gens), v);
}

std::vector<Ideal> minimal_overideals_with_invseq(const Ideal& I, int i, const FPoly& rbar, uint64_t cap) {
    check_cover_args(I, i, rbar);
    const ChainRing* R = I.ring();
    const int N = I.N();
    const uint64_t q = R->q();
    FPoly an = alpha_at(I.invariant(), i + 1, R);
    RPoly r = lift_poly(R, rbar);
    RPoly base = lift_poly(R, I.alpha(i) / (rbar * an)) * f_at(I, i + 1);
    // digit slots (level, degree) for the correction term
    std::vector<std::pair<int, int>> slots;
    for (int j = i + 1; j < N; ++j)
        for (int d = 0; d < I.alpha(j).ideg(); ++d) slots.emplace_back(j, d);
    uint64_t total = 1;
    for (size_t s = 0; s < slots.size(); ++s) {
        if (total > cap / q) throw MathError("cover search space exceeds the configured cap");
        total *= q;
    }
    std::vector<Ideal> out;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        RPoly c(R);
        for (size_t s = 0; s < slots.size(); ++s) {
            auto d = static_cast<Field::Elem>(v % q);
            v /= q;
            if (d) c = c + RPoly::monomial(R, R->lift(d), slots[s].second).mul_pi(slots[s].first - i);
        }
        RPoly g = base + c;  // J = I + <pi^i g>
        RPoly pg = g.mul_pi(i);
        if (!contains(I, pg.mul_pi(1)) || !contains(I, r * pg)) continue;
        std::vector<RPoly> seq = I.canonical();
        seq[i] = g;
        out.push_back(Ideal::from_canonical(R, std::move(seq)));
    }
    return out;
}

std::vector<Cover> all_covers(const Ideal& I, uint64_t cap) {
    std::vector<Cover> out;
    if (I.is_unit()) return out;
    const ChainRing* R = I.ring();
    for (int i = 0; i < I.N(); ++i) {
        const FPoly& ai = I.alpha(i);
        FPoly an = alpha_at(I.invariant(), i + 1, R);
        if (ai.is_zero() || ai == an) continue;
        for (auto& fac : factor(ai / an))
            for (auto& J : minimal_overideals_with_invseq(I, i, fac.poly, cap)) out.push_back({i, fac.poly, J});
    }
    return out;
}

std::string ParamIdeal::label() const {
    std::ostringstream os;
    os << invseq_to_string(inv);
    if (!params.empty()) {
        os << "{";
        for (size_t s = 0; s < params.size(); ++s) {
            if (s) os << ",";
            os << "b" << params[s].j << params[s].k << "=" << params[s].b.to_string();
        }
        os << "}";
    }
    return os.str();
}

namespace {

struct Slot {
    int j, k, bound;
};

std::vector<Slot> param_slots(const ChainRing* R, const InvariantSequence& A, int first) {
    const int N = R->N();
    std::vector<Slot> slots;
    for (int j = first; j <= N - 2; ++j)
        for (int k = 1; k <= N - j - 1; ++k) {
            int bound = (alpha_at(A, j + k, R) / alpha_at(A, j + k + 1, R)).ideg();
            slots.push_back({j, k, bound});
        }
    return slots;
}

int first_nonzero(const InvariantSequence& A) {
    int i = 0;
    while (i < static_cast<int>(A.size()) && A[i].is_zero()) ++i;
    return i;
}

}  // namespace

uint64_t predicted_count(const ChainRing* R, const InvariantSequence& A) {
    uint64_t c = 1;
    for (auto& s : param_slots(R, A, first_nonzero(A)))
        for (int d = 0; d < s.bound; ++d) c *= R->q();
    return c;
}

std::vector<ParamIdeal> enumerate_ideals_with_invseq(const ChainRing* R, const InvariantSequence& A, uint64_t cap) {
    const int N = R->N();
    if (static_cast<int>(A.size()) != N) throw std::invalid_argument("invariant sequence must have N entries");
    check_invseq(A);
    const int first = first_nonzero(A);
    const uint64_t q = R->q();
    std::vector<Slot> slots;
    for (auto& s : param_slots(R, A, first))
        if (s.bound > 0) slots.push_back(s);
    int digits = 0;
    for (auto& s : slots) digits += s.bound;
    uint64_t total = 1;
    for (int d = 0; d < digits; ++d) {
        if (total > cap / q) throw MathError("enumeration exceeds the configured cap");
        total *= q;
    }
    std::vector<RPoly> a(N + 1, RPoly(R));
    for (int j = first; j < N; ++j) a[j] = lift_poly(R, alpha_at(A, j, R) / alpha_at(A, j + 1, R));

    std::vector<ParamIdeal> out;
    out.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        std::vector<Param> params;
        // b[j][k]
        std::vector<std::vector<FPoly>> b(N, std::vector<FPoly>(N + 1, FPoly(R->field_ptr())));
        for (auto& s : slots) {
            std::vector<Field::Elem> c(s.bound);
            for (int d = 0; d < s.bound; ++d) {
                c[d] = static_cast<Field::Elem>(v % q);
                v /= q;
            }
            b[s.j][s.k] = FPoly(R->field_ptr(), c);
            params.push_back({s.j, s.k, b[s.j][s.k]});
        }
        std::vector<RPoly> f(N + 1, RPoly(R));
        f[N] = RPoly::constant(R, 1);
        for (int j = N - 1; j >= first; --j) {
            RPoly fj = a[j] * f[j + 1];
            for (int k = 1; k <= N - j - 1; ++k)
                if (!b[j][k].is_zero()) fj = fj + (lift_poly(R, b[j][k]) * f[j + k + 1]).mul_pi(k);
            f[j] = fj.trunc(N - j);
        }
        f.pop_back();
        out.push_back({A, std::move(params), Ideal::from_canonical(R, std::move(f))});
    }
    return out;
}

std::vector<InvariantSequence> invseqs_below(const InvariantSequence& A_top) {
    const int N = static_cast<int>(A_top.size());
    if (N == 0 || A_top[0].is_zero()) throw MathError("downset of a sequence with alpha_0 = 0 is infinite");
    check_invseq(A_top);
    const Field* F = A_top[0].field();
    auto facs = factor(A_top[0]);
    const int m = static_cast<int>(facs.size());
    std::vector<std::vector<int>> E(N, std::vector<int>(m));
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < m; ++k) E[j][k] = multiplicity(facs[k].poly, A_top[j]);
    std::vector<InvariantSequence> out;
    std::vector<std::vector<int>> e(N, std::vector<int>(m, 0));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == N * m) {
            InvariantSequence A(N);
            for (int j = 0; j < N; ++j) {
                FPoly p = FPoly::constant(F, 1);
                for (int k = 0; k < m; ++k) p = p * facs[k].poly.pow(e[j][k]);
                A[j] = p;
            }
            out.push_back(std::move(A));
            return;
        }
        int j = pos / m, k = pos % m;
        int hi = E[j][k];
        if (j > 0) hi = std::min(hi, e[j - 1][k]);
        for (int v = 0; v <= hi; ++v) {
            e[j][k] = v;
            rec(pos + 1);
        }
        e[j][k] = 0;
    };
    rec(0);
    return out;
}

std::vector<ParamIdeal> enumerate_downset(const ChainRing* R, const InvariantSequence& A_top, uint64_t cap) {
    std::vector<ParamIdeal> out;
    for (auto& A : invseqs_below(A_top)) {
        auto part = enumerate_ideals_with_invseq(R, A, cap);
        if (out.size() + part.size() > cap) throw MathError("downset exceeds the configured cap");
        for (auto& p : part) out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<bool>> inclusion_matrix(const std::vector<Ideal>& ideals) {
    const size_t n = ideals.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    parallel_for(n, [&](size_t a) {
        for (size_t b = 0; b < n; ++b) m[a][b] = a == b ? 1 : is_subideal(ideals[a], ideals[b]);
    });
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) out[a][b] = m[a][b];
    return out;
}

std::vector<Edge> transitive_reduction(const std::vector<std::vector<bool>>& incl) {
    const int n = static_cast<int>(incl.size());
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !incl[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (c != a && c != b && incl[a][c] && incl[c][b]) direct = false;
            if (direct) edges.emplace_back(a, b);
        }
    return edges;
}

std::vector<Edge> hasse_diagram(const std::vector<Ideal>& ideals) {
    auto incl = inclusion_matrix(ideals);
    for (size_t a = 0; a < ideals.size(); ++a)
        for (size_t b = a + 1; b < ideals.size(); ++b)
            if (incl[a][b] && incl[b][a]) throw std::invalid_argument("duplicate ideals in Hasse diagram input");
    return transitive_reduction(incl);
}

std::string dot_export(const std::vector<std::string>& labels, const std::vector<Edge>& edges) {
    std::ostringstream os;
    os << "digraph poset {\n";
    if (!labels.empty()) os << "  rankdir=BT;\n";
    for (size_t i = 0; i < labels.size(); ++i) {
        std::string l;
        for (char c : labels[i]) {
            if (c == '"' || c == '\\') l += '\\';
            l += c;
        }
        os << "  n" << i << " [label=\"" << l << "\"];\n";
    }
    for (auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace chainring
