#include "gct/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace gct {

namespace {

struct SnfWorker {
    IntMat S, U, V;
    int m, d;

    explicit SnfWorker(const IntMat& C) {
        m = static_cast<int>(C.size());
        d = m ? static_cast<int>(C[0].size()) : 0;
        S = C;
        U.assign(m, IntVec(m, Int(0)));
        V.assign(d, IntVec(d, Int(0)));
        for (int i = 0; i < m; ++i) U[i][i] = 1;
        for (int i = 0; i < d; ++i) V[i][i] = 1;
    }

    // Row ops keep C = U*S*V: S <- E*S forces U <- U*E^-1.
    void row_swap(int a, int b) {
        std::swap(S[a], S[b]);
        for (int i = 0; i < m; ++i) std::swap(U[i][a], U[i][b]);
    }
    void row_negate(int a) {
        for (auto& x : S[a]) x = -x;
        for (int i = 0; i < m; ++i) U[i][a] = -U[i][a];
    }
    void row_add(int dst, int src, const Int& q) {  // row dst += q * row src
        for (int j = 0; j < d; ++j) S[dst][j] += q * S[src][j];
        for (int i = 0; i < m; ++i) U[i][src] -= q * U[i][dst];
    }
    // Column ops: S <- S*F forces V <- F^-1*V.
    void col_swap(int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(S[i][a], S[i][b]);
        std::swap(V[a], V[b]);
    }
    void col_negate(int a) {
        for (int i = 0; i < m; ++i) S[i][a] = -S[i][a];
        for (auto& x : V[a]) x = -x;
    }
    void col_add(int dst, int src, const Int& q) {  // col dst += q * col src
        for (int i = 0; i < m; ++i) S[i][dst] += q * S[i][src];
        for (int j = 0; j < d; ++j) V[src][j] -= q * V[dst][j];
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < d; ++j) {
                if (S[i][j] == 0) continue;
                Int a = abs(S[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void reduce() {
        int steps = std::min(m, d);
        for (int t = 0; t < steps; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);
            while (true) {
                bool clean = true;
                for (int i = t + 1; i < m; ++i) {
                    if (S[i][t] == 0) continue;
                    Int q = S[i][t] / S[t][t];
                    if (q != 0) row_add(i, t, -q);
                    if (S[i][t] != 0) {  // remainder became the new, smaller pivot
                        row_swap(t, i);
                        clean = false;
                    }
                }
                for (int j = t + 1; j < d; ++j) {
                    if (S[t][j] == 0) continue;
                    Int q = S[t][j] / S[t][t];
                    if (q != 0) col_add(j, t, -q);
                    if (S[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
                if (!clean) continue;
                // Pull in any entry the pivot does not divide, then restart.
                bool divides_all = true;
                for (int i = t + 1; i < m && divides_all; ++i)
                    for (int j = t + 1; j < d && divides_all; ++j)
                        if (S[i][j] % S[t][t] != 0) {
                            row_add(t, i, Int(1));
                            divides_all = false;
                        }
                if (divides_all) break;
            }
            if (S[t][t] < 0) row_negate(t);
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& C) {
    SnfWorker w(C);
    w.reduce();
    return {std::move(w.U), std::move(w.S), std::move(w.V)};
}

namespace {

// Pads C (and d) to a square system with identical solutions over any
// coefficient ring: extra zero rows demand 0 = 0, extra zero columns add
// unconstrained phantom coordinates.
void pad_square(IntMat& C, IntVec& d) {
    std::size_t m = C.size();
    std::size_t n = m ? C[0].size() : 0;
    std::size_t s = std::max(m, n);
    for (auto& row : C) row.resize(s, Int(0));
    while (C.size() < s) C.emplace_back(s, Int(0));
    d.resize(s, Int(0));
}

// Solves U y = rhs for unimodular integer U; the solution is integral.
IntVec solve_unimodular(const IntMat& U, const IntVec& rhs) {
    const std::size_t n = U.size();
    RatMat M(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(U[i][j]);
        M[i][n] = Rat(rhs[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_unimodular: singular matrix");
        std::swap(M[piv], M[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col] / M[col][col];
            for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    IntVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat v = M[i][n] / M[i][i];
        if (!is_integer(v)) throw std::logic_error("solve_unimodular: non-integral solution");
        y[i] = num(v);
    }
    return y;
}

}  // namespace

bool z2_feasible_affine(const IntMat& C, const IntVec& d) {
    if (C.size() != d.size())
        throw std::invalid_argument("z2_feasible_affine: row count mismatch");
    if (C.empty()) return true;  // no equations: the whole space
    IntMat Cs = C;
    IntVec ds = d;
    pad_square(Cs, ds);
    SmithDecomposition snf = smith_normal_form(Cs);
    IntVec rhs = solve_unimodular(snf.U, ds);
    for (std::size_t i = 0; i < Cs.size(); ++i) {
        const Int& s = snf.S[i][i];
        if (s == 0) {
            if (rhs[i] != 0) return false;  // inconsistent over Q already
        } else if (rhs[i] != 0 && v2(rhs[i]) < v2(s)) {
            return false;  // y_i = rhs_i / s_i has an even denominator
        }
    }
    return true;
}

bool z2_feasible_affine(const AffineSubspace& aff) {
    return z2_feasible_affine(aff.C, aff.d);
}

bool z2_feasible_polytope(const RationalPolytope& P) {
    if (!feasible(P)) return false;
    return z2_feasible_affine(affine_span(P));
}

Int quasipolynomial_index(const RationalPolytope& P) {
    if (!feasible(P)) throw std::invalid_argument("quasipolynomial_index: empty polytope");
    if (!bounding_box(P)) throw std::invalid_argument("quasipolynomial_index: unbounded polytope");
    AffineSubspace aff = affine_span(P);
    if (aff.C.empty()) return Int(1);
    IntMat C = aff.C;
    IntVec d = aff.d;
    pad_square(C, d);
    SmithDecomposition snf = smith_normal_form(C);
    IntVec rhs = solve_unimodular(snf.U, d);
    Int idx(1);
    for (std::size_t i = 0; i < C.size(); ++i) {
        const Int& s = snf.S[i][i];
        if (s == 0) {
            if (rhs[i] != 0)
                throw std::logic_error(
                    "quasipolynomial_index: inconsistent affine hull (upstream bug)");
            continue;
        }
        Int reduced = s / gcd(s, rhs[i] == 0 ? s : rhs[i]);
        idx = lcm_int(idx, reduced);
    }
    return idx;
}

bool decide_saturated_ip(const RationalPolytope& P, bool saturation_assumed) {
    // The flag is the caller's attestation of PH2/SH for this polytope; the
    // decision itself is rational feasibility (saturation transfers a lattice
    // point in some dilation back to k = 1).
    (void)saturation_assumed;
    return feasible(P).has_value();
}

}  // namespace gct
